#include "multicover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ktcover::detail {
namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

class MulticoverSearch {
public:
    explicit MulticoverSearch(const MulticoverInstance& inst)
        : inst_(inst),
          n_elements_(inst.demand.size()),
          n_sets_(inst.sets.size()),
          candidates_(n_elements_, Bits(n_sets_)),
          residual_(inst.demand),
          allowed_(n_sets_),
          mult_(n_sets_, 0)
    {
        for (std::size_t s = 0; s < n_sets_; ++s) {
            const Bits& members = inst.sets[s];
            for (auto e = members.find_first(); e != Bits::npos; e = members.find_next(e)) {
                candidates_[e].set(s);
            }
        }
        for (std::size_t e = 0; e < n_elements_; ++e) {
            if (inst.demand[e] <= 0) {
                throw std::invalid_argument("multicover: demands must be positive");
            }
            if (candidates_[e].none()) {
                throw std::invalid_argument("multicover: element lies in no set");
            }
        }
        allowed_.set();
        setup_groups();
    }

    MulticoverSolution run()
    {
        greedy_incumbent();
        const std::int64_t root = lower_bound();
        if (root < best_cost_) {
            search();
        }
        return {best_cost_, best_mult_, nodes_};
    }

private:
    void setup_groups()
    {
        if (inst_.groups.empty()) {
            return;
        }
        Bits seen(n_sets_);
        std::vector<char> grouped(n_elements_, 0);
        for (const auto& group : inst_.groups) {
            Bits cls(n_sets_);
            for (int e : group) {
                cls |= candidates_[e];
                grouped[e] = 1;
            }
            if (cls.intersects(seen)) {
                return; // not a valid partition of the sets; ignore the groups
            }
            seen |= cls;
            classes_.push_back(std::move(cls));
        }
        any_class_ = std::move(seen);
        groups_ = inst_.groups;
        for (std::size_t e = 0; e < n_elements_; ++e) {
            if (!grouped[e]) {
                ungrouped_.push_back(static_cast<int>(e));
            }
        }
    }

    bool done() const
    {
        return std::all_of(residual_.begin(), residual_.end(), [](std::int64_t r) { return r == 0; });
    }

    void greedy_incumbent()
    {
        std::vector<std::int64_t> residual = residual_;
        std::vector<std::int64_t> mult(n_sets_, 0);
        std::int64_t cost = 0;
        for (;;) {
            std::size_t best_set = n_sets_;
            std::int64_t best_gain = 0;
            for (std::size_t s = 0; s < n_sets_; ++s) {
                std::int64_t gain = 0;
                const Bits& members = inst_.sets[s];
                for (auto e = members.find_first(); e != Bits::npos; e = members.find_next(e)) {
                    gain += residual[e] > 0 ? 1 : 0;
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best_set = s;
                }
            }
            if (best_set == n_sets_) {
                break;
            }
            const Bits& members = inst_.sets[best_set];
            for (auto e = members.find_first(); e != Bits::npos; e = members.find_next(e)) {
                if (residual[e] > 0) {
                    --residual[e];
                }
            }
            ++mult[best_set];
            ++cost;
        }
        best_cost_ = cost;
        best_mult_ = std::move(mult);
    }

    // Elements with pairwise disjoint allowed candidate sets need disjoint
    // set copies, so their residual demands add up.
    std::int64_t packing_bound(const std::vector<int>& elements, const Bits* excluded) const
    {
        std::vector<int> order;
        order.reserve(elements.size());
        for (int e : elements) {
            if (residual_[e] > 0) {
                order.push_back(e);
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const auto ca = (candidates_[a] & allowed_).count();
            const auto cb = (candidates_[b] & allowed_).count();
            if (ca != cb) {
                return ca < cb;
            }
            return residual_[a] > residual_[b];
        });
        Bits used(n_sets_);
        std::int64_t bound = 0;
        for (int e : order) {
            Bits c = candidates_[e] & allowed_;
            if (c.none()) {
                return kInfinity;
            }
            if (excluded != nullptr && c.intersects(*excluded)) {
                continue;
            }
            if (!c.intersects(used)) {
                bound += residual_[e];
                used |= c;
            }
        }
        return bound;
    }

    std::int64_t packing_bound_all() const
    {
        if (all_elements_.empty()) {
            all_elements_.resize(n_elements_);
            std::iota(all_elements_.begin(), all_elements_.end(), 0);
        }
        return packing_bound(all_elements_, nullptr);
    }

    // Each group needs at least its own optimum from its own sets; elements
    // outside every group that cannot use any grouped set add a packing bound.
    std::int64_t group_bound()
    {
        std::int64_t bound = 0;
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            const std::int64_t part = group_optimum(g);
            if (part >= kInfinity) {
                return kInfinity;
            }
            bound += part;
        }
        const std::int64_t rest = packing_bound(ungrouped_, &any_class_);
        return rest >= kInfinity ? kInfinity : bound + rest;
    }

    std::int64_t group_optimum(std::size_t g)
    {
        std::vector<std::int64_t> key;
        key.push_back(static_cast<std::int64_t>(g));
        std::vector<int> live;
        for (int e : groups_[g]) {
            key.push_back(residual_[e]);
            if (residual_[e] > 0) {
                live.push_back(e);
            }
        }
        if (live.empty()) {
            return 0;
        }
        const Bits cls = classes_[g] & allowed_;
        for (auto s = cls.find_first(); s != Bits::npos; s = cls.find_next(s)) {
            key.push_back(-1 - static_cast<std::int64_t>(s));
        }
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        MulticoverInstance sub;
        for (int e : live) {
            sub.demand.push_back(residual_[e]);
        }
        for (auto s = cls.find_first(); s != Bits::npos; s = cls.find_next(s)) {
            Bits members(live.size());
            for (std::size_t i = 0; i < live.size(); ++i) {
                if (inst_.sets[s].test(live[i])) {
                    members.set(i);
                }
            }
            if (members.any()) {
                sub.sets.push_back(std::move(members));
            }
        }
        std::int64_t value = kInfinity;
        bool coverable = true;
        for (std::size_t i = 0; i < live.size() && coverable; ++i) {
            coverable = std::any_of(sub.sets.begin(), sub.sets.end(),
                                    [&](const Bits& b) { return b.test(i); });
        }
        if (coverable) {
            value = MulticoverSearch(sub).run().cost;
        }
        memo_.emplace(std::move(key), value);
        return value;
    }

    std::int64_t lower_bound()
    {
        const std::int64_t lb = packing_bound_all();
        if (lb >= kInfinity || groups_.empty()) {
            return lb;
        }
        return std::max(lb, group_bound());
    }

    void search()
    {
        ++nodes_;
        if (done()) {
            if (cost_ < best_cost_) {
                best_cost_ = cost_;
                best_mult_ = mult_;
            }
            return;
        }
        {
            const std::int64_t cheap = packing_bound_all();
            if (cheap >= kInfinity || cost_ + cheap >= best_cost_) {
                return;
            }
            if (!groups_.empty()) {
                const std::int64_t strong = group_bound();
                if (strong >= kInfinity || cost_ + strong >= best_cost_) {
                    return;
                }
            }
        }

        // Branch on the most constrained element.
        std::size_t pick = n_elements_;
        std::size_t pick_count = n_sets_ + 1;
        for (std::size_t e = 0; e < n_elements_; ++e) {
            if (residual_[e] == 0) {
                continue;
            }
            const std::size_t c = (candidates_[e] & allowed_).count();
            if (c < pick_count || (c == pick_count && residual_[e] > residual_[pick])) {
                pick = e;
                pick_count = c;
            }
        }
        if (pick_count == 0) {
            return;
        }

        std::vector<std::size_t> options;
        const Bits c = candidates_[pick] & allowed_;
        for (auto s = c.find_first(); s != Bits::npos; s = c.find_next(s)) {
            options.push_back(s);
        }
        std::vector<std::int64_t> gain(n_sets_, 0);
        for (std::size_t s : options) {
            const Bits& members = inst_.sets[s];
            for (auto e = members.find_first(); e != Bits::npos; e = members.find_next(e)) {
                gain[s] += residual_[e] > 0 ? 1 : 0;
            }
        }
        std::stable_sort(options.begin(), options.end(),
                         [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });

        // Branch i: options[0..i-1] get no further copies, options[i] gets one.
        std::vector<std::size_t> forbidden;
        for (std::size_t s : options) {
            std::vector<std::size_t> touched;
            const Bits& members = inst_.sets[s];
            for (auto e = members.find_first(); e != Bits::npos; e = members.find_next(e)) {
                if (residual_[e] > 0) {
                    --residual_[e];
                    touched.push_back(e);
                }
            }
            ++mult_[s];
            ++cost_;
            if (cost_ < best_cost_) {
                search();
            }
            --cost_;
            --mult_[s];
            for (std::size_t e : touched) {
                ++residual_[e];
            }
            allowed_.reset(s);
            forbidden.push_back(s);
            if (cost_ + 1 >= best_cost_) {
                break;
            }
        }
        for (std::size_t s : forbidden) {
            allowed_.set(s);
        }
    }

    const MulticoverInstance& inst_;
    std::size_t n_elements_;
    std::size_t n_sets_;
    std::vector<Bits> candidates_;
    std::vector<std::int64_t> residual_;
    Bits allowed_;
    std::vector<std::int64_t> mult_;
    std::int64_t cost_ = 0;

    std::int64_t best_cost_ = kInfinity;
    std::vector<std::int64_t> best_mult_;
    std::uint64_t nodes_ = 0;

    std::vector<std::vector<int>> groups_;
    std::vector<Bits> classes_;
    Bits any_class_;
    std::vector<int> ungrouped_;
    std::map<std::vector<std::int64_t>, std::int64_t> memo_;
    mutable std::vector<int> all_elements_;
};

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const IndependentSetInstance& inst)
        : inst_(inst), n_(inst.weight.size()), best_(n_), current_(n_)
    {
    }

    IndependentSetSolution run()
    {
        Bits live(n_);
        for (std::size_t e = 0; e < n_; ++e) {
            if (inst_.weight[e] > 0) {
                live.set(e);
            }
        }
        search(live, 0);
        return {best_value_, best_};
    }

private:
    // Members of one conflict clique are mutually exclusive, so each clique
    // contributes at most its heaviest live member.
    std::int64_t upper_bound(Bits remaining) const
    {
        std::int64_t bound = 0;
        for (const Bits& clique : inst_.cliques) {
            const Bits inter = remaining & clique;
            if (inter.none()) {
                continue;
            }
            std::int64_t heaviest = 0;
            for (auto e = inter.find_first(); e != Bits::npos; e = inter.find_next(e)) {
                heaviest = std::max(heaviest, inst_.weight[e]);
            }
            bound += heaviest;
            remaining -= inter;
        }
        for (auto e = remaining.find_first(); e != Bits::npos; e = remaining.find_next(e)) {
            bound += inst_.weight[e];
        }
        return bound;
    }

    void search(const Bits& live, std::int64_t value)
    {
        if (live.none()) {
            if (value > best_value_) {
                best_value_ = value;
                best_ = current_;
            }
            return;
        }
        if (value + upper_bound(live) <= best_value_) {
            return;
        }
        std::size_t pick = live.find_first();
        for (auto e = live.find_next(pick); e != Bits::npos; e = live.find_next(e)) {
            if (inst_.weight[e] > inst_.weight[pick]) {
                pick = e;
            }
        }
        Bits with = live - inst_.conflicts[pick];
        with.reset(pick);
        current_.set(pick);
        search(with, value + inst_.weight[pick]);
        current_.reset(pick);

        Bits without = live;
        without.reset(pick);
        search(without, value);
    }

    const IndependentSetInstance& inst_;
    std::size_t n_;
    std::int64_t best_value_ = 0;
    Bits best_;
    Bits current_;
};

} // namespace

MulticoverSolution solve_multicover(const MulticoverInstance& instance)
{
    if (instance.demand.empty()) {
        return {0, std::vector<std::int64_t>(instance.sets.size(), 0), 0};
    }
    return MulticoverSearch(instance).run();
}

IndependentSetSolution solve_independent_set(const IndependentSetInstance& instance)
{
    return IndependentSetSearch(instance).run();
}

} // namespace ktcover::detail

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "iba/distribution.hpp"
#include "iba/errors.hpp"
#include "iba/rng.hpp"

namespace iba {

using Assignment = std::vector<int>;

enum class TimeOffset { Prev, Same };
enum class FactorKind { State, OtherAction };

/// Reference to a parent variable of a factor: either another factor
/// (at the previous or the same time slice) or the protagonist action.
struct ParentRef {
    std::string name;
    TimeOffset offset = TimeOffset::Prev;
    bool protagonist_action = false;

    static ParentRef prev(std::string n) { return {std::move(n), TimeOffset::Prev, false}; }
    static ParentRef same(std::string n) { return {std::move(n), TimeOffset::Same, false}; }
    static ParentRef action() { return {"", TimeOffset::Prev, true}; }
};

/// One discrete variable of the two-slice dynamic Bayesian network.
///
/// State factors carry a value at every time step; OtherAction factors
/// materialize the (fixed-policy) actions of non-protagonist agents and are
/// sampled fresh during each transition.
struct FactorSpec {
    std::string name;
    int cardinality = 1;
    FactorKind kind = FactorKind::State;
    std::vector<ParentRef> parents;
    /// Row-major CPT: one row per parent assignment (mixed radix, parents in
    /// declared order, first parent most significant), `cardinality` entries
    /// per row.
    std::vector<double> cpt;
};

/// Stateless fixed policy of a non-protagonist agent: a map from the values
/// of the factors it observes to a distribution over its actions.
struct FixedPolicy {
    std::string agent;
    std::vector<std::string> observed;            ///< factor names, declared order
    int num_actions = 1;
    std::vector<std::vector<double>> table;       ///< row per observation assignment
};

/// Reference to an influence source: a non-local state factor read at the
/// previous slice, or a non-protagonist action sampled during the step.
struct SourceRef {
    std::string name;
    TimeOffset offset = TimeOffset::Prev;
};

/// One entry of the d-set record rule: a local factor (its value at the
/// start of the step) or the protagonist action taken in the step.
struct DsetEntry {
    std::string name;                              ///< empty for the action
    bool protagonist_action = false;

    static DsetEntry factor(std::string n) { return {std::move(n), false}; }
    static DsetEntry action() { return {"", true}; }
};

/// Partition of the factors into the protagonist's local model.
struct LocalModelSpec {
    std::vector<std::string> x_int;
    std::vector<std::string> x_dest;
    std::vector<SourceRef> y_src;
    std::vector<DsetEntry> dset_rule;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

using RewardFn = std::function<double(const Assignment& prev, int action, const Assignment& next)>;
using InitialDist = std::vector<std::pair<Assignment, double>>;

/// A factored POSG with the non-protagonist policies already folded into
/// action factors. Immutable after construction; all operations are pure.
class FactoredPosg {
public:
    FactoredPosg(std::vector<FactorSpec> factors, int num_actions, RewardFn reward, int horizon,
                 InitialDist initial, std::string name = "")
        : factors_(std::move(factors)),
          num_actions_(num_actions),
          reward_(std::move(reward)),
          horizon_(horizon),
          initial_(std::move(initial)),
          name_(std::move(name)) {
        compile();
    }

    const std::vector<FactorSpec>& factors() const { return factors_; }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    int num_actions() const { return num_actions_; }
    int horizon() const { return horizon_; }
    const InitialDist& initial() const { return initial_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& defects() const { return defects_; }

    int factor_index(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw MalformedInputError("unknown factor: " + n);
        return it->second;
    }
    bool has_factor(const std::string& n) const { return index_.count(n) != 0; }
    bool is_action_factor(int i) const { return factors_[i].kind == FactorKind::OtherAction; }
    const std::vector<int>& state_factor_indices() const { return state_idx_; }
    const std::vector<int>& action_factor_indices() const { return action_idx_; }
    const std::vector<int>& sampling_order() const { return order_; }

    double reward(const Assignment& prev, int action, const Assignment& next) const {
        return reward_(prev, action, next);
    }

    /// CPT row of `factor` given the previous slice, the protagonist action,
    /// and the (partially sampled) new slice. Same-step parents must already
    /// be assigned in `slice`.
    const double* cpt_row(int factor, const Assignment& prev, int action, const Assignment& slice) const {
        require_valid();
        const auto& rp = resolved_[factor];
        std::size_t row = 0;
        for (const auto& p : rp) {
            int v = p.source < 0 ? action : (p.offset == TimeOffset::Prev ? prev[p.source] : slice[p.source]);
            if (v < 0 || v >= p.cardinality)
                throw MalformedInputError("parent value out of range for factor " + factors_[factor].name);
            row = row * static_cast<std::size_t>(p.cardinality) + static_cast<std::size_t>(v);
        }
        return factors_[factor].cpt.data() + row * static_cast<std::size_t>(factors_[factor].cardinality);
    }

    double cpt_prob(int factor, const Assignment& prev, int action, const Assignment& slice) const {
        int v = slice[factor];
        if (v < 0 || v >= factors_[factor].cardinality)
            throw MalformedInputError("value out of range for factor " + factors_[factor].name);
        return cpt_row(factor, prev, action, slice)[v];
    }

    /// Enumerates every positive-probability outcome of one step: each
    /// callback receives the full new slice (next state values plus the
    /// non-protagonist actions taken) and its joint probability.
    template <typename Fn>
    void for_each_outcome(const Assignment& prev, int action, Fn&& fn) const {
        require_valid();
        Assignment slice(factors_.size(), 0);
        enumerate(prev, action, slice, 0, 1.0, fn);
    }

    /// Samples one step; returns the full new slice.
    Assignment sample_step(const Assignment& prev, int action, CounterRng& rng) const {
        require_valid();
        Assignment slice(factors_.size(), 0);
        for (int f : order_) {
            const double* row = cpt_row(f, prev, action, slice);
            double u = rng.next_double(), acc = 0.0;
            int card = factors_[f].cardinality;
            int v = card - 1;
            for (int i = 0; i < card; ++i) {
                acc += row[i];
                if (u < acc) {
                    v = i;
                    break;
                }
            }
            slice[f] = v;
        }
        return slice;
    }

    /// Probability of moving to exactly `slice` (next state values and
    /// non-protagonist actions) from `prev` under `action`.
    double slice_prob(const Assignment& prev, int action, const Assignment& slice) const {
        double p = 1.0;
        for (int f : order_) p *= cpt_prob(f, prev, action, slice);
        return p;
    }

    std::uint64_t encode_state(const Assignment& s) const {
        std::uint64_t key = 0;
        for (int f : state_idx_) key = key * static_cast<std::uint64_t>(factors_[f].cardinality) +
                                       static_cast<std::uint64_t>(s[f]);
        return key;
    }

    std::uint64_t num_states() const {
        std::uint64_t n = 1;
        for (int f : state_idx_) {
            if (n > (1ULL << 62) / static_cast<std::uint64_t>(factors_[f].cardinality))
                throw CapacityError("state space too large to enumerate");
            n *= static_cast<std::uint64_t>(factors_[f].cardinality);
        }
        return n;
    }

private:
    struct ResolvedParent {
        int source = -1;  ///< factor index, or -1 for the protagonist action
        TimeOffset offset = TimeOffset::Prev;
        int cardinality = 0;
    };

    void compile() {
        if (horizon_ < 1) defects_.push_back("horizon must be >= 1");
        if (num_actions_ < 1) defects_.push_back("action set must be nonempty");
        for (int i = 0; i < num_factors(); ++i) {
            if (factors_[i].cardinality < 1)
                defects_.push_back("factor " + factors_[i].name + ": cardinality < 1");
            if (!index_.emplace(factors_[i].name, i).second)
                defects_.push_back("duplicate factor name: " + factors_[i].name);
            (factors_[i].kind == FactorKind::State ? state_idx_ : action_idx_).push_back(i);
        }
        resolved_.resize(factors_.size());
        std::vector<std::vector<int>> same_edges(factors_.size());
        for (int i = 0; i < num_factors(); ++i) {
            for (const auto& p : factors_[i].parents) {
                ResolvedParent rp;
                if (p.protagonist_action) {
                    rp.source = -1;
                    rp.cardinality = num_actions_;
                } else {
                    auto it = index_.find(p.name);
                    if (it == index_.end()) {
                        defects_.push_back("factor " + factors_[i].name + ": dangling parent " + p.name);
                        continue;
                    }
                    rp.source = it->second;
                    rp.offset = p.offset;
                    rp.cardinality = factors_[rp.source].cardinality;
                    if (p.offset == TimeOffset::Same) same_edges[rp.source].push_back(i);
                }
                resolved_[i].push_back(rp);
            }
            std::size_t rows = 1;
            for (const auto& rp : resolved_[i]) rows *= static_cast<std::size_t>(rp.cardinality);
            if (factors_[i].cpt.size() != rows * static_cast<std::size_t>(factors_[i].cardinality))
                defects_.push_back("factor " + factors_[i].name + ": CPT size mismatch");
        }
        // Topological order over same-step edges.
        std::vector<int> indeg(factors_.size(), 0);
        for (int i = 0; i < num_factors(); ++i)
            for (const auto& rp : resolved_[i])
                if (rp.source >= 0 && rp.offset == TimeOffset::Same) ++indeg[i];
        std::vector<int> queue;
        for (int i = 0; i < num_factors(); ++i)
            if (indeg[i] == 0) queue.push_back(i);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int f = queue[head];
            order_.push_back(f);
            for (int child : same_edges[f])
                if (--indeg[child] == 0) queue.push_back(child);
        }
        if (order_.size() != factors_.size()) {
            defects_.push_back("same-step parent relation has a cycle");
            order_.clear();
        }
    }

    void require_valid() const {
        if (!defects_.empty()) throw MalformedInputError("model has defects: " + defects_.front());
    }

    template <typename Fn>
    void enumerate(const Assignment& prev, int action, Assignment& slice, std::size_t depth, double p,
                   Fn&& fn) const {
        if (depth == order_.size()) {
            fn(const_cast<const Assignment&>(slice), p);
            return;
        }
        int f = order_[depth];
        const double* row = cpt_row(f, prev, action, slice);
        for (int v = 0; v < factors_[f].cardinality; ++v) {
            if (row[v] == 0.0) continue;
            slice[f] = v;
            enumerate(prev, action, slice, depth + 1, p * row[v], fn);
        }
        slice[f] = 0;
    }

    std::vector<FactorSpec> factors_;
    int num_actions_;
    RewardFn reward_;
    int horizon_;
    InitialDist initial_;
    std::string name_;
    std::map<std::string, int> index_;
    std::vector<int> state_idx_, action_idx_, order_;
    std::vector<std::vector<ResolvedParent>> resolved_;
    std::vector<std::string> defects_;
};

/// Appends a non-protagonist agent's fixed policy to the factor list as an
/// action factor whose CPT is the policy table over its observed factors.
inline FactorSpec materialize_policy(const FixedPolicy& policy, const std::vector<FactorSpec>& declared) {
    FactorSpec f;
    f.name = policy.agent;
    f.cardinality = policy.num_actions;
    f.kind = FactorKind::OtherAction;
    std::size_t rows = 1;
    for (const auto& obs : policy.observed) {
        f.parents.push_back(ParentRef::prev(obs));
        auto it = std::find_if(declared.begin(), declared.end(),
                               [&](const FactorSpec& d) { return d.name == obs; });
        if (it == declared.end()) throw MalformedInputError("fixed policy observes unknown factor " + obs);
        rows *= static_cast<std::size_t>(it->cardinality);
    }
    if (policy.table.size() != rows) throw MalformedInputError("fixed policy table has wrong row count");
    f.cpt.reserve(rows * static_cast<std::size_t>(policy.num_actions));
    for (const auto& row : policy.table) {
        if (row.size() != static_cast<std::size_t>(policy.num_actions))
            throw MalformedInputError("fixed policy row has wrong arity");
        f.cpt.insert(f.cpt.end(), row.begin(), row.end());
    }
    return f;
}

// ---------------------------------------------------------------------------
// Local model resolution and d-set handling
// ---------------------------------------------------------------------------

using DsetHistory = std::vector<std::uint32_t>;

/// Precomputed indices and codecs for a (model, local spec) pair.
class LocalView {
public:
    LocalView(const FactoredPosg& model, const LocalModelSpec& local) : model_(&model), local_(&local) {
        for (const auto& n : local.x_int) x_int_.push_back(model.factor_index(n));
        for (const auto& n : local.x_dest) x_dest_.push_back(model.factor_index(n));
        local_idx_ = x_int_;
        local_idx_.insert(local_idx_.end(), x_dest_.begin(), x_dest_.end());
        std::sort(local_idx_.begin(), local_idx_.end());
        for (const auto& s : local.y_src) {
            y_idx_.push_back(model.factor_index(s.name));
            y_offset_.push_back(s.offset);
        }
        y_card_ = 1;
        for (int f : y_idx_) y_card_ *= model.factors()[f].cardinality;
        dset_vocab_ = 1;
        for (const auto& e : local.dset_rule) {
            int card = e.protagonist_action ? model.num_actions() : model.factors()[model.factor_index(e.name)].cardinality;
            dset_card_.push_back(card);
            dset_idx_.push_back(e.protagonist_action ? -1 : model.factor_index(e.name));
            dset_vocab_ *= card;
        }
    }

    const FactoredPosg& model() const { return *model_; }
    const LocalModelSpec& local() const { return *local_; }
    const std::vector<int>& x_int() const { return x_int_; }
    const std::vector<int>& x_dest() const { return x_dest_; }
    const std::vector<int>& local_factors() const { return local_idx_; }
    int y_cardinality() const { return y_card_; }
    int dset_vocab() const { return dset_vocab_; }

    /// Values of the local factors in `s` (sorted factor-index order).
    Assignment local_obs(const Assignment& s) const {
        Assignment o(local_idx_.size());
        for (std::size_t i = 0; i < local_idx_.size(); ++i) o[i] = s[local_idx_[i]];
        return o;
    }

    std::uint64_t encode_local(const Assignment& obs) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < local_idx_.size(); ++i)
            k = k * static_cast<std::uint64_t>(model_->factors()[local_idx_[i]].cardinality) +
                static_cast<std::uint64_t>(obs[i]);
        return k;
    }

    std::uint64_t num_local_states() const {
        std::uint64_t n = 1;
        for (int f : local_idx_) n *= static_cast<std::uint64_t>(model_->factors()[f].cardinality);
        return n;
    }

    Assignment decode_local(std::uint64_t key) const {
        Assignment o(local_idx_.size());
        for (std::size_t i = local_idx_.size(); i-- > 0;) {
            auto card = static_cast<std::uint64_t>(model_->factors()[local_idx_[i]].cardinality);
            o[i] = static_cast<int>(key % card);
            key /= card;
        }
        return o;
    }

    /// D-set record token for a step taken from full state `s` with
    /// protagonist action `a`: the rule's factor values at the start of the
    /// step plus the action itself, mixed-radix packed.
    std::uint32_t record_token(const Assignment& s, int a) const {
        std::uint32_t tok = 0;
        for (std::size_t i = 0; i < dset_idx_.size(); ++i) {
            int v = dset_idx_[i] < 0 ? a : s[dset_idx_[i]];
            tok = tok * static_cast<std::uint32_t>(dset_card_[i]) + static_cast<std::uint32_t>(v);
        }
        return tok;
    }

    /// Same as record_token but reading factor values from a local
    /// observation vector (sorted local order) instead of a full state.
    std::uint32_t record_token_local(const Assignment& obs, int a) const {
        std::uint32_t tok = 0;
        for (std::size_t i = 0; i < dset_idx_.size(); ++i) {
            int v;
            if (dset_idx_[i] < 0) {
                v = a;
            } else {
                auto pos = std::lower_bound(local_idx_.begin(), local_idx_.end(), dset_idx_[i]);
                v = obs[static_cast<std::size_t>(pos - local_idx_.begin())];
            }
            tok = tok * static_cast<std::uint32_t>(dset_card_[i]) + static_cast<std::uint32_t>(v);
        }
        return tok;
    }

    /// Joint index of the influence sources for one step: previous-slice
    /// sources read from `prev`, within-step action sources from `slice`.
    int y_index(const Assignment& prev, const Assignment& slice) const {
        int k = 0;
        for (std::size_t i = 0; i < y_idx_.size(); ++i) {
            int v = y_offset_[i] == TimeOffset::Prev ? prev[y_idx_[i]] : slice[y_idx_[i]];
            k = k * model_->factors()[y_idx_[i]].cardinality + v;
        }
        return k;
    }

    /// Writes the source values encoded by `y` into prev/slice scratch
    /// assignments (previous-slice sources into `prev`, action sources into
    /// `slice`).
    void apply_y(int y, Assignment& prev, Assignment& slice) const {
        for (std::size_t i = y_idx_.size(); i-- > 0;) {
            int card = model_->factors()[y_idx_[i]].cardinality;
            int v = y % card;
            y /= card;
            (y_offset_[i] == TimeOffset::Prev ? prev : slice)[y_idx_[i]] = v;
        }
    }

    /// Packs a d-set history into a 64-bit key (throws CapacityError if the
    /// history space does not fit).
    std::uint64_t encode_dset(const DsetHistory& d) const {
        std::uint64_t key = 0;
        auto base = static_cast<std::uint64_t>(dset_vocab_) + 1;
        for (std::uint32_t tok : d) {
            if (key > ((1ULL << 62) - tok - 1) / base) throw CapacityError("d-set history space exceeds 64-bit keys");
            key = key * base + tok + 1;
        }
        return key;
    }

private:
    const FactoredPosg* model_;
    const LocalModelSpec* local_;
    std::vector<int> x_int_, x_dest_, local_idx_, y_idx_, dset_idx_, dset_card_;
    std::vector<TimeOffset> y_offset_;
    int y_card_ = 1, dset_vocab_ = 1;
};

/// Deterministic d-set growth: appends the record of one step.
inline DsetHistory dset_update(const DsetHistory& dset, const LocalView& view, const Assignment& local_obs,
                               int action) {
    DsetHistory next = dset;
    next.push_back(view.record_token_local(local_obs, action));
    return next;
}

// ---------------------------------------------------------------------------
// transition_prob and validation
// ---------------------------------------------------------------------------

/// Probability of the full successor state given the previous state, the
/// protagonist action, and the non-protagonist actions taken in the step.
/// The product runs over state factors only; actions are conditioned upon.
inline double transition_prob(const FactoredPosg& model, const Assignment& state, int action,
                              const Assignment& other_actions, const Assignment& next_state) {
    Assignment slice = next_state;
    for (std::size_t i = 0; i < model.action_factor_indices().size(); ++i)
        slice[model.action_factor_indices()[i]] = other_actions.empty() ? 0 : other_actions[i];
    double p = 1.0;
    for (int f : model.state_factor_indices()) p *= model.cpt_prob(f, state, action, slice);
    return p;
}

namespace detail {

template <typename Fn>
inline void for_each_assignment(const FactoredPosg& model, const std::vector<int>& factor_set, Assignment& scratch,
                                std::size_t depth, Fn&& fn) {
    if (depth == factor_set.size()) {
        fn(const_cast<const Assignment&>(scratch));
        return;
    }
    int f = factor_set[depth];
    for (int v = 0; v < model.factors()[f].cardinality; ++v) {
        scratch[f] = v;
        for_each_assignment(model, factor_set, scratch, depth + 1, fn);
    }
    scratch[f] = 0;
}

} // namespace detail

/// Structural validation of a model and its local partition. Violations are
/// returned as data; an empty report means the pair is usable downstream.
inline ValidationReport validate_model(const FactoredPosg& model, const LocalModelSpec& local) {
    ValidationReport report;
    for (const auto& d : model.defects()) report.violations.push_back(d);
    if (!report.violations.empty()) return report;

    // CPT rows normalized.
    for (const auto& f : model.factors()) {
        std::size_t rows = f.cpt.size() / static_cast<std::size_t>(f.cardinality);
        for (std::size_t r = 0; r < rows; ++r) {
            double s = 0.0;
            bool in_range = true;
            for (int v = 0; v < f.cardinality; ++v) {
                double p = f.cpt[r * static_cast<std::size_t>(f.cardinality) + static_cast<std::size_t>(v)];
                s += p;
                in_range = in_range && p >= 0.0 && p <= 1.0;
            }
            if (!in_range || std::abs(s - 1.0) > 1e-12) {
                report.violations.push_back("factor " + f.name + ": row not normalized");
                break;
            }
        }
    }
    // Initial distribution.
    double s0 = 0.0;
    for (const auto& [assign, p] : model.initial()) {
        s0 += p;
        if (assign.size() != static_cast<std::size_t>(model.num_factors()))
            report.violations.push_back("initial assignment has wrong arity");
        else
            for (int f : model.state_factor_indices())
                if (assign[f] < 0 || assign[f] >= model.factors()[f].cardinality)
                    report.violations.push_back("initial value out of range for " + model.factors()[f].name);
    }
    if (std::abs(s0 - 1.0) > 1e-12) report.violations.push_back("initial distribution not normalized");

    // Action factors may not observe the protagonist or the new slice.
    for (int f : model.action_factor_indices())
        for (const auto& p : model.factors()[f].parents) {
            if (p.protagonist_action)
                report.violations.push_back("action factor " + model.factors()[f].name +
                                            " conditioned on protagonist action");
            else if (p.offset == TimeOffset::Same &&
                     model.factors()[model.factor_index(p.name)].kind != FactorKind::OtherAction)
                report.violations.push_back("action factor " + model.factors()[f].name +
                                            " has same-step state parent " + p.name);
        }

    // Local partition.
    auto contains = [](const std::vector<std::string>& v, const std::string& n) {
        return std::find(v.begin(), v.end(), n) != v.end();
    };
    for (const auto& n : local.x_int)
        if (contains(local.x_dest, n)) report.violations.push_back("factor " + n + " in both x_int and x_dest");
    for (const auto& src : local.y_src)
        if (contains(local.x_int, src.name) || contains(local.x_dest, src.name))
            report.violations.push_back("y_src member " + src.name + " is a local factor");
    auto resolves = [&](const std::string& n) { return model.has_factor(n); };
    for (const auto& n : local.x_int)
        if (!resolves(n)) report.violations.push_back("x_int references unknown factor " + n);
    for (const auto& n : local.x_dest)
        if (!resolves(n)) report.violations.push_back("x_dest references unknown factor " + n);
    for (const auto& s : local.y_src)
        if (!resolves(s.name)) report.violations.push_back("y_src references unknown factor " + s.name);
    for (const auto& e : local.dset_rule)
        if (!e.protagonist_action && !(contains(local.x_int, e.name) || contains(local.x_dest, e.name)))
            report.violations.push_back("dset_rule references non-local identifier " + e.name);
    if (!report.violations.empty()) return report;

    auto is_local = [&](const std::string& n) { return contains(local.x_int, n) || contains(local.x_dest, n); };
    auto in_y = [&](const std::string& n, TimeOffset off) {
        for (const auto& s : local.y_src)
            if (s.name == n && s.offset == off) return true;
        return false;
    };
    for (const auto& n : local.x_int) {
        for (const auto& p : model.factors()[model.factor_index(n)].parents) {
            if (p.protagonist_action) continue;
            bool ok = p.offset == TimeOffset::Prev ? is_local(p.name)
                                                   : contains(local.x_int, p.name);
            if (!ok) report.violations.push_back("x_int has non-local parent: " + n + " <- " + p.name);
        }
    }
    for (const auto& n : local.x_dest) {
        for (const auto& p : model.factors()[model.factor_index(n)].parents) {
            if (p.protagonist_action) continue;
            bool ok = is_local(p.name) ? (p.offset == TimeOffset::Prev || contains(local.x_dest, p.name))
                                       : in_y(p.name, p.offset);
            if (!ok) report.violations.push_back("x_dest has parent outside local/y_src: " + n + " <- " + p.name);
        }
    }
    if (!report.violations.empty()) return report;

    // Reward locality and finiteness, probed exhaustively at desk scale.
    std::uint64_t states = 1;
    bool enumerable = true;
    for (int f : model.state_factor_indices()) {
        states *= static_cast<std::uint64_t>(model.factors()[f].cardinality);
        if (states > 4096) {
            enumerable = false;
            break;
        }
    }
    if (enumerable) {
        LocalView view(model, local);
        std::vector<int> nonlocal;
        for (int f : model.state_factor_indices())
            if (!std::binary_search(view.local_factors().begin(), view.local_factors().end(), f))
                nonlocal.push_back(f);
        Assignment prev(model.num_factors(), 0), next(model.num_factors(), 0);
        bool local_ok = true, finite_ok = true;
        detail::for_each_assignment(model, view.local_factors(), prev, 0, [&](const Assignment& pv) {
            detail::for_each_assignment(model, view.local_factors(), next, 0, [&](const Assignment& nv) {
                for (int a = 0; a < model.num_actions(); ++a) {
                    Assignment p1 = pv, n1 = nv;
                    for (int f : nonlocal) {
                        p1[f] = model.factors()[f].cardinality - 1;
                        n1[f] = model.factors()[f].cardinality - 1;
                    }
                    double r0 = model.reward(pv, a, nv), r1 = model.reward(p1, a, n1);
                    if (!std::isfinite(r0) || !std::isfinite(r1)) finite_ok = false;
                    if (r0 != r1) local_ok = false;
                }
            });
        });
        if (!finite_ok) report.violations.push_back("reward is not finite for all inputs");
        if (!local_ok) report.violations.push_back("reward depends on non-local factors");

        // Transition rows sum to 1 over full outcomes.
        Assignment scratch(model.num_factors(), 0);
        bool rows_ok = true;
        detail::for_each_assignment(model, model.state_factor_indices(), scratch, 0, [&](const Assignment& sv) {
            for (int a = 0; a < model.num_actions() && rows_ok; ++a) {
                double sum = 0.0;
                model.for_each_outcome(sv, a, [&](const Assignment&, double p) { sum += p; });
                if (std::abs(sum - 1.0) > 1e-9) rows_ok = false;
            }
        });
        if (!rows_ok) report.violations.push_back("step outcomes do not sum to 1");
    }
    return report;
}

} // namespace iba

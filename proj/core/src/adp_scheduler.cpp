/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The d2dsim Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "d2dsim/adp_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "d2dsim/error.hpp"

namespace d2dsim {

std::vector<AlphaTriplet> enumerate_auxiliary_actions(double granularity, bool include_zero) {
    if (!(granularity > 0.0) || granularity > 1.0) throw ConfigError("alpha granularity must be in (0, 1]");
    const double steps = 1.0 / granularity;
    const long n = std::lround(steps);
    if (n < 1 || std::abs(steps - static_cast<double>(n)) > 1e-9 * steps) {
        throw ConfigError("1 / alpha granularity must be an integer");
    }
    std::vector<double> grid;
    if (include_zero) grid.push_back(0.0);
    for (long i = 1; i <= n; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(n));

    std::vector<AlphaTriplet> out;
    out.reserve(grid.size() * grid.size() * grid.size());
    for (double m : grid)
        for (double p : grid)
            for (double u : grid) out.push_back({m, p, u});
    return out;
}

namespace {

constexpr std::array<EndpointKind, kNumKinds> kKinds{EndpointKind::MacroBS, EndpointKind::MicroBS,
                                                      EndpointKind::UE};

// Same comparison as the mapping loop, restricted to the per-kind leaders.
std::int32_t pick(const MappingResult::Decision& d, const AlphaTriplet& alpha) {
    std::array<std::size_t, kNumKinds> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return static_cast<std::uint32_t>(d.reps[a].order) < static_cast<std::uint32_t>(d.reps[b].order);
    });
    bool have = false;
    double best = 0.0;
    std::int32_t who = -1;
    for (std::size_t k : idx) {
        const auto& r = d.reps[k];
        if (r.order < 0) continue;
        const double score = alpha.weight(kKinds[k]) * static_cast<double>(r.sum);
        if (!have || score > best) {
            have = true;
            best = score;
            who = r.order;
        }
    }
    return have && best > 0.0 ? who : -1;
}

}  // namespace

bool MappingResult::valid_for(const AlphaTriplet& other) const {
    for (const auto& d : decisions) {
        if (pick(d, other) != d.picked) return false;
    }
    return true;
}

MappingOptions mapping_options(const AdpConfig& cfg, int n_rbs) {
    MappingOptions o;
    o.multi_rb = cfg.multi_rb;
    o.max_sweeps = cfg.multi_rb ? (cfg.max_rb_sweeps > 0 ? cfg.max_rb_sweeps : n_rbs) : 1;
    return o;
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Allocation under construction. Keeps per-RB interference at every UE so a
// candidate triplet is scored, and its effect on the network total computed,
// without re-running the full rate and transfer evaluation. Interference sums
// are accumulated in acceptance order, which is the order compute_delta uses,
// so the resulting rates match it exactly. A pair's greedy fill moves
// min(sum of its rates, bits available), which is all the total needs.
class Allocation {
   public:
    struct Candidate {
        EndpointId tx;
        EndpointId rx;
        int rb;
    };

    Allocation(const SystemState& s, const RadioContext& ctx, std::span<const std::uint32_t> downloaders)
        : s_(s),
          ctx_(ctx),
          downloaders_(downloaders),
          n_rbs_(ctx.rules.n_rbs),
          n_ue_(ctx.lb.n_ue()),
          on_rb_(static_cast<std::size_t>(n_rbs_)),
          rb_version_(static_cast<std::size_t>(n_rbs_), 1),
          ibar_(static_cast<std::size_t>(n_rbs_) * n_ue_, 0.0),
          source_(n_ue_, kNone),
          tx_pairs_(ctx.lb.n_endpoints(), 0),
          sink_(ctx.lb.n_endpoints(), kNone),
          used_(static_cast<std::size_t>(ctx.lb.n_endpoints()) * static_cast<std::size_t>(n_rbs_), 0) {}

    Bits total() const { return total_; }
    bool receiving(std::uint32_t u) const { return source_[u] != kNone; }
    bool transmitting(EndpointId e) const { return tx_pairs_[to_index(e)] > 0; }
    EndpointId source_of(std::uint32_t u) const { return pairs_[source_[u]].tx; }
    bool used(EndpointId e, int rb) const { return used_[slot(e, rb)] != 0; }
    std::uint32_t rb_version(int rb) const { return rb_version_[static_cast<std::size_t>(rb)]; }

    bool may_serve(EndpointId e, EndpointId rx) const {
        const auto u = s_.user_index(rx);
        if (e == rx || transmitting(rx)) return false;
        if (source_[u] != kNone) return pairs_[source_[u]].tx == e;
        if (ctx_.lb.is_ue(e) && receiving(s_.user_index(e))) return false;
        if (ctx_.rules.strict_transmitter && sink_[to_index(e)] != kNone && sink_[to_index(e)] != to_index(rx)) {
            return false;
        }
        return true;
    }

    // Bits the pair could still move this step.
    Bits room(EndpointId e, EndpointId rx) const {
        const auto u = s_.user_index(rx);
        if (source_[u] != kNone) {
            const auto& p = pairs_[source_[u]];
            return p.avail - p.total;
        }
        return available(e, u);
    }

    Bits candidate_delta(EndpointId e, EndpointId rx, int rb) const {
        return rate(e, rx, ibar_[islot(rb, s_.user_index(rx))]);
    }

    // Change of the network total if `c` were appended. Remembers the rate
    // changes it found for a following commit() of the same candidate.
    Bits evaluate(const Candidate& c) {
        changed_.clear();
        Bits gain = 0;
        const double pc = ctx_.lb.power(c.tx, c.rx);
        for (std::size_t t : on_rb_[static_cast<std::size_t>(c.rb)]) {
            const auto& tr = trip_[t];
            const double att = ctx_.lb.attenuation(c.tx, tr.rx);
            if (!std::isfinite(att)) continue;
            const Bits d = rate(tr.tx, tr.rx, ibar_[islot(c.rb, s_.user_index(tr.rx))] + pc / att);
            if (d == tr.delta) continue;
            changed_.emplace_back(t, d);
            // A pair holds at most one triplet per RB.
            const auto& p = pairs_[tr.pair];
            gain += std::min(p.sum_delta - tr.delta + d, p.avail) - p.total;
        }
        pending_delta_ = candidate_delta(c.tx, c.rx, c.rb);
        gain += std::min(pending_delta_, room(c.tx, c.rx));
        return gain;
    }

    void commit(const Candidate& c) {
        const auto u = s_.user_index(c.rx);
        if (source_[u] == kNone) {
            source_[u] = static_cast<std::uint32_t>(pairs_.size());
            pairs_.push_back({c.tx, available(c.tx, u)});
            ++tx_pairs_[to_index(c.tx)];
            if (sink_[to_index(c.tx)] == kNone) sink_[to_index(c.tx)] = to_index(c.rx);
        }
        const auto pidx = source_[u];

        for (auto [t, d] : changed_) {
            auto& tr = trip_[t];
            settle(tr.pair, d - tr.delta);
            tr.delta = d;
        }
        trip_.push_back({c.tx, c.rx, c.rb, pidx, pending_delta_});
        settle(pidx, pending_delta_);
        on_rb_[static_cast<std::size_t>(c.rb)].push_back(trip_.size() - 1);
        used_[slot(c.tx, c.rb)] = 1;
        ++rb_version_[static_cast<std::size_t>(c.rb)];

        // Only downloaders are ever read back.
        const double pc = ctx_.lb.power(c.tx, c.rx);
        for (std::uint32_t v : downloaders_) {
            const EndpointId ve = s_.user_endpoint(v);
            if (ve == c.tx || ve == c.rx) continue;
            const double att = ctx_.lb.attenuation(c.tx, ve);
            if (std::isfinite(att)) ibar_[islot(c.rb, v)] += pc / att;
        }
    }

    Action action() const {
        Action a;
        a.triplets.reserve(trip_.size());
        for (const auto& t : trip_) a.add({t.tx, t.rx, t.rb});
        return a;
    }

    DeltaMap deltas() const {
        DeltaMap d;
        d.reserve(trip_.size());
        for (const auto& t : trip_) d.push_back(t.delta);
        return d;
    }

   private:
    struct Trip {
        EndpointId tx;
        EndpointId rx;
        int rb;
        std::uint32_t pair;
        Bits delta;
    };
    struct Pair {
        EndpointId tx;
        Bits avail;
        Bits sum_delta = 0;
        Bits total = 0;
    };

    void settle(std::uint32_t p, Bits delta_change) {
        auto& pair = pairs_[p];
        pair.sum_delta += delta_change;
        const Bits now = std::min(pair.sum_delta, pair.avail);
        total_ += now - pair.total;
        pair.total = now;
    }

    Bits available(EndpointId e, std::uint32_t u) const {
        Bits sum = 0;
        for (ContentId c : s_.active(u)) sum += std::max<Bits>(0, s_.held(e, c) - s_.duplet(u, c).downloaded);
        return sum;
    }

    Bits rate(EndpointId tx, EndpointId rx, double interf) const {
        if (!ctx_.lb.coverage(tx, rx)) return 0;
        return sinr_to_delta(sinr(ctx_.lb, tx, rx, ctx_.noise_w, interf), ctx_.table);
    }

    std::size_t slot(EndpointId e, int rb) const {
        return static_cast<std::size_t>(to_index(e)) * static_cast<std::size_t>(n_rbs_) + static_cast<std::size_t>(rb);
    }
    std::size_t islot(int rb, std::uint32_t u) const {
        return static_cast<std::size_t>(rb) * n_ue_ + u;
    }

    const SystemState& s_;
    const RadioContext& ctx_;
    std::span<const std::uint32_t> downloaders_;
    int n_rbs_;
    std::uint32_t n_ue_;
    std::vector<Trip> trip_;
    std::vector<Pair> pairs_;
    std::vector<std::vector<std::size_t>> on_rb_;
    std::vector<std::uint32_t> rb_version_;
    std::vector<double> ibar_;
    std::vector<std::uint32_t> source_;
    std::vector<std::uint32_t> tx_pairs_;
    std::vector<std::uint32_t> sink_;
    std::vector<std::uint8_t> used_;
    std::vector<std::pair<std::size_t, Bits>> changed_;
    Bits pending_delta_ = 0;
    Bits total_ = 0;
};

// Per-RB rates of one (transmitter, downloader) candidate, recomputed only on
// RBs whose interference changed since they were last read.
struct RateCache {
    std::vector<Bits> delta;
    std::vector<std::uint32_t> version;

    void ensure(int n_rbs) {
        if (delta.empty()) {
            delta.assign(static_cast<std::size_t>(n_rbs), 0);
            version.assign(static_cast<std::size_t>(n_rbs), 0);
        }
    }
};

std::vector<std::uint32_t> sorted_downloaders(const SystemState& s) {
    std::vector<std::pair<Step, std::uint32_t>> keyed;
    for (std::uint32_t u = 0; u < s.n_users(); ++u) {
        const Step w = s.downloader_priority(u);
        if (w != kNoStep) keyed.emplace_back(w, u);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::uint32_t> out;
    out.reserve(keyed.size());
    for (auto [w, u] : keyed) out.push_back(u);
    return out;
}

}  // namespace

MappingResult map_alpha_to_action(const AlphaTriplet& alpha, const SystemState& s, const RadioContext& ctx,
                                  const MappingOptions& opts) {
    MappingResult out;
    const auto downloaders = sorted_downloaders(s);
    Allocation alloc(s, ctx, downloaders);
    const int sweeps = opts.multi_rb ? std::max(opts.max_sweeps, 1) : 1;
    const int n_rbs = ctx.rules.n_rbs;

    std::vector<std::vector<RateCache>> cache(downloaders.size());
    for (std::size_t di = 0; di < downloaders.size(); ++di) {
        cache[di].resize(ctx.lb.covering(s.user_endpoint(downloaders[di])).size());
    }

    for (int sweep = 0; sweep < sweeps; ++sweep) {
        bool accepted_any = false;
        for (std::size_t di = 0; di < downloaders.size(); ++di) {
            const std::uint32_t u = downloaders[di];
            const EndpointId rx = s.user_endpoint(u);
            if (alloc.transmitting(rx)) continue;

            const auto candidates = ctx.lb.covering(rx);
            const bool fixed = alloc.receiving(u);
            const EndpointId source = fixed ? alloc.source_of(u) : EndpointId{};

            bool have_best = false;
            EndpointId best_e{};
            double best_score = 0.0;
            int best_rb = -1;
            MappingResult::Decision dec;
            for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
                const EndpointId e = candidates[ci];
                if (fixed && e != source) continue;
                if (!alloc.may_serve(e, rx)) continue;
                const Bits room = alloc.room(e, rx);
                if (room <= 0) continue;
                auto& rc = cache[di][ci];
                rc.ensure(n_rbs);
                Bits sum = 0;
                Bits top = 0;
                int top_rb = -1;
                for (int r = 0; r < n_rbs; ++r) {
                    if (alloc.used(e, r)) continue;
                    const auto rs = static_cast<std::size_t>(r);
                    if (rc.version[rs] != alloc.rb_version(r)) {
                        rc.delta[rs] = alloc.candidate_delta(e, rx, r);
                        rc.version[rs] = alloc.rb_version(r);
                    }
                    const Bits y = std::min(rc.delta[rs], room);
                    sum += y;
                    if (top_rb < 0 || y > top) {
                        top = y;
                        top_rb = r;
                    }
                }
                if (top_rb < 0) continue;
                const auto kind = ctx.lb.kind(e);
                auto& rep = dec.reps[static_cast<std::size_t>(kind_slot(kind))];
                if (rep.order < 0 || sum > rep.sum) {
                    rep.order = static_cast<std::int32_t>(ci);
                    rep.sum = sum;
                }
                const double score = alpha.weight(kind) * static_cast<double>(sum);
                if (!have_best || score > best_score) {
                    have_best = true;
                    best_e = e;
                    best_score = score;
                    best_rb = top_rb;
                }
            }
            const bool go = have_best && best_score > 0.0;
            if (have_best) {
                dec.picked = go ? static_cast<std::int32_t>(std::find(candidates.begin(), candidates.end(), best_e) -
                                                            candidates.begin())
                                : -1;
                out.decisions.push_back(dec);
            }
            if (!go) continue;

            const Allocation::Candidate cand{best_e, rx, best_rb};
            const Bits t_curr = alloc.total();
            const Bits t_new = t_curr + alloc.evaluate(cand);
            if (t_new > t_curr) {
                alloc.commit(cand);
                out.accepted_totals.push_back(alloc.total());
                accepted_any = true;
            }
        }
        if (!accepted_any) break;
    }

    out.action = alloc.action();
    out.delta = alloc.deltas();
    out.transfers = compute_chi(out.action, out.delta, s);
    return out;
}

double immediate_cost(const SystemState& s, const TransferResult& chi) {
    std::unordered_map<std::uint64_t, Bits> moved;
    for (const auto& c : chi.chi) {
        moved[(static_cast<std::uint64_t>(s.user_index(c.rx)) << 32) | to_index(c.content)] += c.bits;
    }
    double cost = 0.0;
    const Step k = s.step();
    for (std::uint32_t u = 0; u < s.n_users(); ++u) {
        for (ContentId c : s.active(u)) {
            const auto& d = s.duplet(u, c);
            const auto& item = s.catalog()[c];
            const Step left = d.want + item.deadline_steps - k;
            if (left <= 0) throw InvariantViolation("cost evaluated on an expired duplet");
            Bits got = d.downloaded;
            if (auto it = moved.find((static_cast<std::uint64_t>(u) << 32) | to_index(c)); it != moved.end()) {
                got += it->second;
            }
            cost += static_cast<double>(item.size_bits - got) / static_cast<double>(left);
        }
    }
    return cost;
}

std::vector<Action> PersistenceForecaster::forecast(const SystemState& s, const Action& /*a*/,
                                                    const TransferResult& chi, const AlphaTriplet& alpha,
                                                    int horizon, const RadioContext& ctx,
                                                    const MappingOptions& opts) const {
    std::vector<Action> out;
    if (horizon <= 0) return out;
    out.reserve(static_cast<std::size_t>(horizon));
    SystemState next = s;
    apply_transfers(next, chi);
    for (int q = 1; q <= horizon; ++q) {
        next.set_step(s.step() + q);
        next.reap_expired();
        if (!next.has_active()) {
            out.resize(static_cast<std::size_t>(horizon));
            break;
        }
        auto m = map_alpha_to_action(alpha, next, ctx, opts);
        apply_transfers(next, m.transfers);
        out.push_back(std::move(m.action));
    }
    return out;
}

std::vector<Action> forecast_future_actions(const SystemState& s, const Action& a, const AlphaTriplet& alpha,
                                            int horizon, const RadioContext& ctx, const MappingOptions& opts) {
    const auto delta = compute_delta(a, ctx.lb, ctx.noise_w, ctx.table);
    const auto chi = compute_chi(a, delta, s);
    return PersistenceForecaster{}.forecast(s, a, chi, alpha, horizon, ctx, opts);
}

ValueEstimate estimate_value(const SystemState& s, const Action& a, std::span<const Action> future,
                             const RadioContext& ctx) {
    ValueEstimate out;
    if (future.empty()) return out;
    SystemState next = s;
    {
        const auto delta = compute_delta(a, ctx.lb, ctx.noise_w, ctx.table);
        apply_transfers(next, compute_chi(a, delta, next));
    }
    for (std::size_t q = 0; q < future.size(); ++q) {
        next.set_step(s.step() + static_cast<Step>(q) + 1);
        next.reap_expired();
        out.horizon_used = static_cast<int>(q) + 1;
        if (!next.has_active()) {
            out.horizon_used = static_cast<int>(future.size());
            break;
        }
        const auto delta = compute_delta(future[q], ctx.lb, ctx.noise_w, ctx.table);
        const auto chi = compute_chi(future[q], delta, next);
        out.value += immediate_cost(next, chi);
        apply_transfers(next, chi);
    }
    return out;
}

namespace {

// Maps every alpha of `members` against `s`, reusing a mapping for any alpha
// it provably does not depend on, and splits the members by resulting action.
struct Branch {
    std::vector<std::size_t> members;
    MappingResult mapping;
};

std::vector<Branch> map_group(const SystemState& s, const RadioContext& ctx, std::span<const AlphaTriplet> alphas,
                              const std::vector<std::size_t>& members, const MappingOptions& opts) {
    std::vector<Branch> out;
    for (std::size_t i : members) {
        bool placed = false;
        for (std::size_t b = 0; b < out.size() && !placed; ++b) {
            const auto& m = out[b].mapping;
            if (m.valid_for(alphas[i])) {
                out[b].members.push_back(i);
                placed = true;
            }
        }
        if (placed) continue;
        auto m = map_alpha_to_action(alphas[i], s, ctx, opts);
        for (std::size_t b = 0; b < out.size() && !placed; ++b) {
            if (out[b].mapping.action == m.action) {
                out[b].members.push_back(i);
                placed = true;
            }
        }
        if (placed) continue;
        out.push_back({{i}, std::move(m)});
    }
    return out;
}

// Adds the rollout cost of every member to value[member]. `s` is the state
// at step k + q with the previous action already applied.
void rollout_group(SystemState s, Step k, int q, int horizon, const RadioContext& ctx,
                   std::span<const AlphaTriplet> alphas, const std::vector<std::size_t>& members,
                   const MappingOptions& opts, std::vector<double>& value) {
    for (; q <= horizon; ++q) {
        s.set_step(k + q);
        s.reap_expired();
        if (!s.has_active()) return;
        auto branches = map_group(s, ctx, alphas, members, opts);
        if (branches.size() == 1) {
            const auto& m = branches.front().mapping;
            const auto delta = compute_delta(m.action, ctx.lb, ctx.noise_w, ctx.table);
            const auto chi = compute_chi(m.action, delta, s);
            const double c = immediate_cost(s, chi);
            for (std::size_t i : members) value[i] += c;
            apply_transfers(s, chi);
            continue;
        }
        for (auto& br : branches) {
            SystemState next = s;
            const auto delta = compute_delta(br.mapping.action, ctx.lb, ctx.noise_w, ctx.table);
            const auto chi = compute_chi(br.mapping.action, delta, next);
            const double c = immediate_cost(next, chi);
            for (std::size_t i : br.members) value[i] += c;
            apply_transfers(next, chi);
            rollout_group(std::move(next), k, q + 1, horizon, ctx, alphas, br.members, opts, value);
        }
        return;
    }
}

}  // namespace

Selection select_action(const SystemState& s, const RadioContext& ctx, std::span<const AlphaTriplet> alphas,
                        int horizon, const MappingOptions& opts, const ActionForecaster& forecaster) {
    if (dynamic_cast<const PersistenceForecaster*>(&forecaster) == nullptr) {
        return select_action_reference(s, ctx, alphas, horizon, opts, forecaster);
    }
    if (alphas.empty()) throw ConfigError("empty auxiliary action set");

    std::vector<std::size_t> all(alphas.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    auto branches = map_group(s, ctx, alphas, all, opts);

    std::vector<double> cost(alphas.size(), 0.0);
    std::vector<double> value(alphas.size(), 0.0);
    std::vector<std::size_t> branch_of(alphas.size(), 0);
    for (std::size_t b = 0; b < branches.size(); ++b) {
        auto& br = branches[b];
        const double c = immediate_cost(s, br.mapping.transfers);
        for (std::size_t i : br.members) {
            cost[i] = c;
            branch_of[i] = b;
        }
        if (horizon > 0) {
            SystemState next = s;
            apply_transfers(next, br.mapping.transfers);
            rollout_group(std::move(next), s.step(), 1, horizon, ctx, alphas, br.members, opts, value);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        if (cost[i] + value[i] < cost[best] + value[best]) best = i;
    }
    Selection sel;
    sel.mapping = std::move(branches[branch_of[best]].mapping);
    sel.action = sel.mapping.action;
    sel.cost = cost[best];
    sel.value = value[best];
    sel.alpha = alphas[best];
    sel.alpha_index = best;
    return sel;
}

Selection select_action_reference(const SystemState& s, const RadioContext& ctx,
                                  std::span<const AlphaTriplet> alphas, int horizon, const MappingOptions& opts,
                                  const ActionForecaster& forecaster) {
    if (alphas.empty()) throw ConfigError("empty auxiliary action set");
    Selection best;
    bool have = false;
    double best_total = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        auto m = map_alpha_to_action(alphas[i], s, ctx, opts);
        const double cost = immediate_cost(s, m.transfers);
        double value = 0.0;
        if (horizon > 0) {
            const auto future = forecaster.forecast(s, m.action, m.transfers, alphas[i], horizon, ctx, opts);
            value = estimate_value(s, m.action, future, ctx).value;
        }
        const double total = cost + value;
        if (!have || total < best_total) {
            have = true;
            best_total = total;
            best.action = m.action;
            best.mapping = std::move(m);
            best.cost = cost;
            best.value = value;
            best.alpha = alphas[i];
            best.alpha_index = i;
        }
    }
    return best;
}

std::vector<Bits> replay_gains(const Action& a, const SystemState& s, const RadioContext& ctx) {
    std::vector<Bits> totals;
    totals.reserve(a.size());
    Action prefix;
    for (const auto& t : a) {
        prefix.add(t);
        const auto delta = compute_delta(prefix, ctx.lb, ctx.noise_w, ctx.table);
        totals.push_back(compute_chi(prefix, delta, s).total());
    }
    return totals;
}

AdpScheduler::AdpScheduler(AdpConfig cfg, int n_rbs, std::shared_ptr<const ActionForecaster> forecaster)
    : cfg_(cfg),
      opts_(mapping_options(cfg, n_rbs)),
      alphas_(enumerate_auxiliary_actions(cfg.alpha_granularity, cfg.include_zero_alpha)),
      forecaster_(forecaster ? std::move(forecaster) : std::make_shared<PersistenceForecaster>()) {}

Selection AdpScheduler::schedule(const SystemState& s, const RadioContext& ctx) const {
    return select_action(s, ctx, alphas_, cfg_.horizon, opts_, *forecaster_);
}

}  // namespace d2dsim

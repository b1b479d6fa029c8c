#include <homproof/solver.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_set>

using std::optional;
using std::string;
using std::vector;

namespace homproof
{
    auto stats_csv_header() -> string
    {
        return "decisions,conflicts,propagations,time_ms";
    }

    auto to_csv_row(const SolveStats & stats) -> string
    {
        std::ostringstream out;
        out.setf(std::ios::fixed);
        out.precision(3);
        out << stats.decisions << ',' << stats.conflicts << ',' << stats.propagations << ',' << stats.time_ms;
        return out.str();
    }

    namespace
    {
        class Dpll
        {
            int _num_vars;
            vector<vector<Lit>> _clauses;
            vector<vector<int>> _watches;
            vector<signed char> _value;
            vector<Lit> _trail;
            vector<std::size_t> _level_start;
            vector<bool> _flipped;
            std::size_t _qhead = 0;
            SolveStats & _stats;

            static auto code(Lit l) -> std::size_t { return 2 * static_cast<std::size_t>(var_of(l) - 1) + (l < 0); }

            auto value(Lit l) const -> int { return l > 0 ? _value[l] : -_value[-l]; }

            auto assign(Lit l) -> void
            {
                _value[var_of(l)] = l > 0 ? 1 : -1;
                _trail.push_back(l);
            }

            auto undo_to(std::size_t size) -> void
            {
                while (_trail.size() > size) {
                    _value[var_of(_trail.back())] = 0;
                    _trail.pop_back();
                }
                _qhead = std::min(_qhead, _trail.size());
            }

            auto propagate() -> bool
            {
                while (_qhead < _trail.size()) {
                    Lit falsified = -_trail[_qhead++];
                    auto & ws = _watches[code(falsified)];
                    std::size_t i = 0, j = 0;
                    while (i < ws.size()) {
                        int ci = ws[i++];
                        auto & c = _clauses[ci];
                        if (c[0] == falsified)
                            std::swap(c[0], c[1]);
                        if (value(c[0]) == 1) {
                            ws[j++] = ci;
                            continue;
                        }
                        bool moved = false;
                        for (std::size_t k = 2; k < c.size(); ++k)
                            if (value(c[k]) != -1) {
                                std::swap(c[1], c[k]);
                                _watches[code(c[1])].push_back(ci);
                                moved = true;
                                break;
                            }
                        if (moved)
                            continue;
                        ws[j++] = ci;
                        if (value(c[0]) == -1) {
                            while (i < ws.size())
                                ws[j++] = ws[i++];
                            ws.resize(j);
                            return false;
                        }
                        assign(c[0]);
                        ++_stats.propagations;
                    }
                    ws.resize(j);
                }
                return true;
            }

        public:
            Dpll(const CnfInstance & cnf, SolveStats & stats) :
                _num_vars(cnf.num_vars()),
                _watches(2 * static_cast<std::size_t>(cnf.num_vars())),
                _value(static_cast<std::size_t>(cnf.num_vars()) + 1, 0),
                _stats(stats)
            {
                _clauses.reserve(cnf.size());
                for (const auto & c : cnf.clauses())
                    _clauses.push_back(c);
            }

            auto solve(const DpllOptions & options) -> SolveStatus
            {
                for (std::size_t ci = 0; ci < _clauses.size(); ++ci) {
                    const auto & c = _clauses[ci];
                    if (c.empty())
                        return SolveStatus::Unsat;
                    if (c.size() == 1) {
                        if (value(c[0]) == -1)
                            return SolveStatus::Unsat;
                        if (value(c[0]) == 0) {
                            assign(c[0]);
                            ++_stats.propagations;
                        }
                        continue;
                    }
                    _watches[code(c[0])].push_back(static_cast<int>(ci));
                    _watches[code(c[1])].push_back(static_cast<int>(ci));
                }

                std::uint64_t ticks = 0;
                while (true) {
                    while (! propagate()) {
                        ++_stats.conflicts;
                        while (! _flipped.empty() && _flipped.back()) {
                            undo_to(_level_start.back());
                            _level_start.pop_back();
                            _flipped.pop_back();
                        }
                        if (_level_start.empty())
                            return SolveStatus::Unsat;
                        Lit decision = _trail[_level_start.back()];
                        undo_to(_level_start.back());
                        _flipped.back() = true;
                        assign(-decision);
                    }

                    if (options.deadline && (++ticks & 1023) == 0 && std::chrono::steady_clock::now() > *options.deadline)
                        return SolveStatus::Aborted;

                    int next = 0;
                    for (int v = 1; v <= _num_vars; ++v)
                        if (_value[v] == 0) {
                            next = v;
                            break;
                        }
                    if (next == 0)
                        return SolveStatus::Sat;

                    ++_stats.decisions;
                    _level_start.push_back(_trail.size());
                    _flipped.push_back(false);
                    assign(next);
                }
            }

            auto model() const -> vector<bool>
            {
                vector<bool> result(static_cast<std::size_t>(_num_vars) + 1, false);
                for (int v = 1; v <= _num_vars; ++v)
                    result[v] = _value[v] == 1;
                return result;
            }
        };

        auto satisfies(const CnfInstance & cnf, const vector<bool> & model) -> bool
        {
            return std::all_of(cnf.clauses().begin(), cnf.clauses().end(), [&](const Clause & c) {
                return std::any_of(c.begin(), c.end(), [&](Lit l) { return model[var_of(l)] == (l > 0); });
            });
        }
    }

    auto dpll_solve(const CnfInstance & cnf, const DpllOptions & options) -> SolveResult
    {
        SolveResult result;
        auto start = std::chrono::steady_clock::now();
        Dpll solver{cnf, result.stats};
        result.status = solver.solve(options);
        if (result.status == SolveStatus::Sat) {
            result.model = solver.model();
            if (! satisfies(cnf, result.model))
                throw std::logic_error("dpll produced a model that falsifies a clause");
        }
        result.stats.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    namespace
    {
        struct MaskClause
        {
            std::uint32_t pos = 0;
            std::uint32_t neg = 0;

            auto size() const -> int { return std::popcount(pos) + std::popcount(neg); }
            auto empty() const -> bool { return pos == 0 && neg == 0; }
            auto subsumes(const MaskClause & other) const -> bool
            {
                return (pos & ~other.pos) == 0 && (neg & ~other.neg) == 0;
            }
            auto key() const -> std::uint64_t { return std::uint64_t{pos} << 32 | neg; }
        };

        struct Record
        {
            MaskClause clause;
            int left = -1;
            int right = -1;
            int pivot = 0;
        };

        auto to_mask(const Clause & c) -> MaskClause
        {
            MaskClause m;
            for (auto l : c)
                (l > 0 ? m.pos : m.neg) |= std::uint32_t{1} << (var_of(l) - 1);
            return m;
        }

        auto to_clause(const MaskClause & m, int num_vars) -> Clause
        {
            Clause c;
            for (int v = 1; v <= num_vars; ++v) {
                auto bit = std::uint32_t{1} << (v - 1);
                if (m.neg & bit)
                    c.push_back(-v);
                if (m.pos & bit)
                    c.push_back(v);
            }
            return c;
        }
    }

    auto saturate(const CnfInstance & cnf, int var_budget) -> optional<ResolutionProof>
    {
        if (var_budget > max_saturation_budget)
            throw SolverError("saturation budget is limited to " + std::to_string(max_saturation_budget) + " variables");
        if (cnf.num_vars() > var_budget)
            throw SolverError("instance has " + std::to_string(cnf.num_vars()) + " variables, budget is " + std::to_string(var_budget));

        vector<Record> records;
        std::unordered_set<std::uint64_t> seen;
        using Entry = std::pair<int, int>;
        std::priority_queue<Entry, vector<Entry>, std::greater<>> pending;
        vector<int> active;
        int empty_record = -1;

        auto add = [&](Record r) {
            if (! seen.insert(r.clause.key()).second)
                return;
            int id = static_cast<int>(records.size());
            if (r.clause.empty() && empty_record < 0)
                empty_record = id;
            pending.emplace(r.clause.size(), id);
            records.push_back(r);
        };

        for (const auto & c : cnf.clauses())
            add(Record{to_mask(c)});

        while (empty_record < 0 && ! pending.empty()) {
            int given = pending.top().second;
            pending.pop();
            MaskClause g = records[given].clause;

            if (std::any_of(active.begin(), active.end(), [&](int a) { return records[a].clause.subsumes(g); }))
                continue;
            std::erase_if(active, [&](int a) { return g.subsumes(records[a].clause); });

            for (std::size_t i = 0; i < active.size() && empty_record < 0; ++i) {
                int other = active[i];
                MaskClause o = records[other].clause;
                std::uint32_t clash = (g.pos & o.neg) | (g.neg & o.pos);
                if (std::popcount(clash) != 1)
                    continue;
                MaskClause r{(g.pos | o.pos) & ~clash, (g.neg | o.neg) & ~clash};
                add(Record{r, given, other, std::countr_zero(clash) + 1});
            }
            active.push_back(given);
        }

        if (empty_record < 0)
            return std::nullopt;

        vector<int> needed;
        vector<bool> marked(records.size(), false);
        vector<int> stack{empty_record};
        while (! stack.empty()) {
            int r = stack.back();
            stack.pop_back();
            if (marked[r])
                continue;
            marked[r] = true;
            needed.push_back(r);
            if (records[r].left >= 0) {
                stack.push_back(records[r].left);
                stack.push_back(records[r].right);
            }
        }
        // Antecedents are always created before their resolvents.
        std::sort(needed.begin(), needed.end());

        vector<int> step_of(records.size(), 0);
        ResolutionProof proof;
        for (int r : needed) {
            ProofStep step;
            step.id = static_cast<int>(proof.steps.size()) + 1;
            step.clause = to_clause(records[r].clause, cnf.num_vars());
            if (records[r].left >= 0) {
                step.antecedents = {step_of[records[r].left], step_of[records[r].right]};
                step.pivot = records[r].pivot;
            }
            step_of[r] = step.id;
            proof.steps.push_back(std::move(step));
        }
        return proof;
    }
}

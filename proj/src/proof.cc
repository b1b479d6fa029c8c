#include <homproof/proof.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace homproof
{
    ResolveError::ResolveError(ResolveErrc code, const string & message) :
        std::runtime_error(message),
        _code(code)
    {
    }

    namespace
    {
        auto has(const Clause & c, Lit l) -> bool
        {
            return std::binary_search(c.begin(), c.end(), l, literal_less);
        }

        auto clashing_variables(const Clause & a, const Clause & b) -> vector<int>
        {
            vector<int> result;
            for (auto l : a)
                if (has(b, -l))
                    result.push_back(var_of(l));
            return result;
        }
    }

    auto resolve(const Clause & c1, const Clause & c2, int pivot) -> Clause
    {
        bool pos1 = has(c1, pivot), neg1 = has(c1, -pivot);
        bool pos2 = has(c2, pivot), neg2 = has(c2, -pivot);
        if (! (pos1 || neg1) || ! (pos2 || neg2))
            throw ResolveError(ResolveErrc::PivotMissing, "pivot " + std::to_string(pivot) + " missing from an antecedent");
        if (! ((pos1 && neg2) || (neg1 && pos2)))
            throw ResolveError(ResolveErrc::PivotSameSign, "pivot " + std::to_string(pivot) + " has the same sign in both antecedents");

        Clause out;
        out.reserve(c1.size() + c2.size());
        std::merge(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(out), literal_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        std::erase_if(out, [&](Lit l) { return var_of(l) == pivot; });
        return out;
    }

    auto ResolutionProof::num_derived() const -> std::size_t
    {
        return std::count_if(steps.begin(), steps.end(), [](const ProofStep & s) { return ! s.is_input(); });
    }

    auto to_string(CheckReason r) -> string
    {
        switch (r) {
        case CheckReason::NotAnInputClause: return "NotAnInputClause";
        case CheckReason::BadResolvent: return "BadResolvent";
        case CheckReason::NoEmptyClause: return "NoEmptyClause";
        case CheckReason::DanglingAntecedent: return "DanglingAntecedent";
        case CheckReason::BadStepId: return "BadStepId";
        }
        return "?";
    }

    auto check_refutation(const CnfInstance & cnf, const ResolutionProof & proof) -> CheckResult
    {
        CheckResult result;
        auto fail = [&](int id, CheckReason reason, string message) -> CheckResult {
            result.ok = false;
            result.step_id = id;
            result.reason = reason;
            result.message = "step " + std::to_string(id) + ": " + std::move(message);
            return result;
        };

        const auto & steps = proof.steps;
        if (steps.empty() || ! steps.back().clause.empty())
            return fail(steps.empty() ? 0 : steps.back().id, CheckReason::NoEmptyClause, "last step is not the empty clause");

        for (std::size_t i = 0; i < steps.size(); ++i) {
            const auto & step = steps[i];
            int id = static_cast<int>(i) + 1;
            if (step.id != id)
                return fail(step.id, CheckReason::BadStepId, "expected id " + std::to_string(id));

            if (step.is_input()) {
                if (step.clause != canonical_clause(step.clause) || ! cnf.contains(step.clause))
                    return fail(id, CheckReason::NotAnInputClause, "clause is not in the formula");
                continue;
            }

            if (step.antecedents.size() != 2)
                return fail(id, CheckReason::DanglingAntecedent, "derived step needs exactly two antecedents");
            for (int a : step.antecedents)
                if (a < 1 || a >= id)
                    return fail(id, CheckReason::DanglingAntecedent, "antecedent " + std::to_string(a) + " is not an earlier step");

            const auto & left = steps[step.antecedents[0] - 1].clause;
            const auto & right = steps[step.antecedents[1] - 1].clause;
            if (step.pivot <= 0)
                return fail(id, CheckReason::BadResolvent, "no pivot");
            Clause expected;
            try {
                expected = resolve(left, right, step.pivot);
            }
            catch (const ResolveError & e) {
                return fail(id, CheckReason::BadResolvent, e.what());
            }
            if (expected != step.clause)
                return fail(id, CheckReason::BadResolvent, "clause is not the resolvent on " + std::to_string(step.pivot));
            if (is_tautology(expected))
                result.tautology_warnings.push_back(id);
        }

        result.ok = true;
        return result;
    }

    auto is_tree_like(const ResolutionProof & proof) -> bool
    {
        vector<int> uses(proof.steps.size() + 1, 0);
        for (const auto & step : proof.steps)
            for (int a : step.antecedents)
                if (a >= 1 && static_cast<std::size_t>(a) < uses.size() && ++uses[a] > 1)
                    return false;
        return true;
    }

    auto ProofBuilder::input(const Clause & c) -> int
    {
        auto canonical = canonical_clause(c);
        if (auto it = _ids.find(canonical); it != _ids.end())
            return it->second;
        int id = static_cast<int>(_proof.steps.size()) + 1;
        _ids.emplace(canonical, id);
        _proof.steps.push_back(ProofStep{id, std::move(canonical), {}, 0});
        return id;
    }

    auto ProofBuilder::derive(int a, int b, int pivot) -> int
    {
        auto resolvent = resolve(clause(a), clause(b), pivot);
        if (auto it = _ids.find(resolvent); it != _ids.end())
            return it->second;
        int id = static_cast<int>(_proof.steps.size()) + 1;
        _ids.emplace(resolvent, id);
        _proof.steps.push_back(ProofStep{id, std::move(resolvent), {a, b}, pivot});
        return id;
    }

    TraceError::TraceError(const string & message, long line) :
        std::runtime_error("trace line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    auto write_trace(const ResolutionProof & proof) -> string
    {
        std::ostringstream out;
        for (const auto & step : proof.steps) {
            out << step.id;
            for (auto l : step.clause)
                out << ' ' << l;
            out << " 0";
            for (int a : step.antecedents)
                out << ' ' << a;
            out << " 0\n";
        }
        return out.str();
    }

    auto parse_trace(string_view text, const CnfInstance & cnf) -> ResolutionProof
    {
        ResolutionProof proof;
        std::istringstream in{string{text}};
        string line;
        long lineno = 0;

        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == 'c')
                continue;

            std::istringstream words{line};
            vector<long> numbers;
            string token;
            while (words >> token) {
                std::size_t used = 0;
                long value = 0;
                try {
                    value = std::stol(token, &used);
                }
                catch (const std::exception &) {
                    throw TraceError("bad number '" + token + "'", lineno);
                }
                if (used != token.size())
                    throw TraceError("bad number '" + token + "'", lineno);
                numbers.push_back(value);
            }

            if (numbers.size() < 3 || numbers.back() != 0)
                throw TraceError("step must end with 0", lineno);
            ProofStep step;
            if (numbers[0] < 1 || numbers[0] > (1L << 30))
                throw TraceError("bad step id", lineno);
            step.id = static_cast<int>(numbers[0]);
            if (! proof.steps.empty() && step.id <= proof.steps.back().id)
                throw TraceError("ids must be ascending", lineno);

            std::size_t pos = 1;
            for (; pos < numbers.size() && numbers[pos] != 0; ++pos) {
                if (numbers[pos] > cnf.num_vars() || -numbers[pos] > cnf.num_vars())
                    throw TraceError("literal " + std::to_string(numbers[pos]) + " out of range", lineno);
                step.clause.push_back(static_cast<Lit>(numbers[pos]));
            }
            ++pos;
            for (; pos + 1 < numbers.size(); ++pos) {
                if (numbers[pos] <= 0 || numbers[pos] >= step.id)
                    throw TraceError("antecedent " + std::to_string(numbers[pos]) + " does not precede step " + std::to_string(step.id), lineno);
                step.antecedents.push_back(static_cast<int>(numbers[pos]));
            }
            if (pos != numbers.size() - 1)
                throw TraceError("missing antecedent terminator", lineno);
            if (step.antecedents.size() != 0 && step.antecedents.size() != 2)
                throw TraceError("derived steps need exactly two antecedents", lineno);
            step.clause = canonical_clause(std::move(step.clause));

            if (! step.is_input()) {
                auto lookup = [&](int id) -> const ProofStep * {
                    auto it = std::lower_bound(proof.steps.begin(), proof.steps.end(), id,
                        [](const ProofStep & s, int want) { return s.id < want; });
                    return it != proof.steps.end() && it->id == id ? &*it : nullptr;
                };
                const auto * left = lookup(step.antecedents[0]);
                const auto * right = lookup(step.antecedents[1]);
                if (left && right) {
                    auto candidates = clashing_variables(left->clause, right->clause);
                    for (int v : candidates)
                        if (resolve(left->clause, right->clause, v) == step.clause) {
                            step.pivot = v;
                            break;
                        }
                    if (step.pivot == 0 && ! candidates.empty())
                        step.pivot = candidates.front();
                }
            }
            proof.steps.push_back(std::move(step));
        }
        return proof;
    }
}

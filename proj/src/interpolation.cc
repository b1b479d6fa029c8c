#include <homproof/interpolation.hh>

#include <algorithm>
#include <sstream>
#include <unordered_map>

using std::map;
using std::string;
using std::string_view;
using std::vector;

namespace homproof
{
    SplitError::SplitError(SplitErrc code, const string & message, long index) :
        std::runtime_error(message),
        _code(code),
        _index(index)
    {
    }

    namespace
    {
        auto partition_error(const SplitInstance & s) -> std::optional<int>
        {
            vector<int> owner(s.cnf.size(), 0);
            for (const auto * list : {&s.a_clauses, &s.b_clauses})
                for (int i : *list) {
                    if (i < 0 || static_cast<std::size_t>(i) >= s.cnf.size())
                        return i;
                    if (owner[i]++)
                        return i;
                }
            for (std::size_t i = 0; i < owner.size(); ++i)
                if (owner[i] == 0)
                    return static_cast<int>(i);
            return std::nullopt;
        }

        // bit 1: occurs in an A clause, bit 2: occurs in a B clause.
        auto occurrence(const SplitInstance & s) -> vector<int>
        {
            vector<int> seen(static_cast<std::size_t>(s.cnf.num_vars()) + 1, 0);
            for (int i : s.a_clauses)
                for (auto l : s.cnf.clauses()[i])
                    seen[var_of(l)] |= 1;
            for (int i : s.b_clauses)
                for (auto l : s.cnf.clauses()[i])
                    seen[var_of(l)] |= 2;
            return seen;
        }
    }

    auto validate_split(const SplitInstance & s) -> SplitCheck
    {
        if (auto bad = partition_error(s))
            return SplitCheck{false, SplitErrc::BadPartition, *bad};

        auto seen = occurrence(s);
        for (std::size_t i = 0; i < s.cnf.size(); ++i)
            for (auto l : s.cnf.clauses()[i])
                if (seen[var_of(l)] == 3 && ! s.p_vars.contains(var_of(l)))
                    return SplitCheck{false, SplitErrc::MixedClause, static_cast<int>(i)};
        return SplitCheck{};
    }

    auto classify_variables(const SplitInstance & s) -> vector<VarClass>
    {
        auto seen = occurrence(s);
        vector<VarClass> result(seen.size(), VarClass::Shared);
        for (std::size_t v = 1; v < seen.size(); ++v) {
            if (s.p_vars.contains(static_cast<int>(v)))
                continue;
            if (seen[v] == 1)
                result[v] = VarClass::ALocal;
            else if (seen[v] == 2)
                result[v] = VarClass::BLocal;
        }
        return result;
    }

    namespace
    {
        class CircuitBuilder
        {
            Circuit _circuit;
            int _const[2] = {-1, -1};
            std::unordered_map<int, int> _input, _negated;

            auto add(Gate g) -> int
            {
                _circuit.gates.push_back(g);
                return static_cast<int>(_circuit.gates.size()) - 1;
            }

        public:
            auto constant(bool b) -> int
            {
                auto & slot = _const[b];
                if (slot < 0)
                    slot = add({GateKind::Const, b ? 1 : 0});
                return slot;
            }

            auto input(int var) -> int
            {
                auto [it, fresh] = _input.try_emplace(var, -1);
                if (fresh)
                    it->second = add({GateKind::Input, var});
                return it->second;
            }

            auto negated_input(int var) -> int
            {
                auto [it, fresh] = _negated.try_emplace(var, -1);
                if (fresh)
                    it->second = add({GateKind::Not, input(var)});
                return it->second;
            }

            auto op(GateKind kind, int a, int b) -> int { return add({kind, a, b}); }

            auto finish(int output) && -> Circuit
            {
                _circuit.output = output;
                return std::move(_circuit);
            }
        };
    }

    auto interpolate(const SplitInstance & s, const ResolutionProof & proof) -> Circuit
    {
        if (auto check = validate_split(s); ! check)
            throw SplitError(SplitErrc::SplitInvalid, "split is invalid at clause " + std::to_string(check.clause), check.clause);
        if (auto check = check_refutation(s.cnf, proof); ! check)
            throw SplitError(SplitErrc::NotARefutation, "proof rejected: " + check.message, check.step_id);

        std::unordered_map<Clause, bool, ClauseHash> in_a;
        for (int i : s.a_clauses)
            in_a.emplace(s.cnf.clauses()[i], true);
        for (int i : s.b_clauses)
            in_a.emplace(s.cnf.clauses()[i], false);
        auto classes = classify_variables(s);

        CircuitBuilder builder;
        vector<int> gate_of(proof.steps.size() + 1, -1);
        for (const auto & step : proof.steps) {
            if (step.is_input()) {
                // A leaves are 0, B leaves are 1.
                gate_of[step.id] = builder.constant(! in_a.at(step.clause));
                continue;
            }
            int left = step.antecedents[0], right = step.antecedents[1];
            const auto & left_clause = proof.steps[left - 1].clause;
            bool left_positive = std::binary_search(left_clause.begin(), left_clause.end(), step.pivot, literal_less);
            int pos_gate = gate_of[left_positive ? left : right];
            int neg_gate = gate_of[left_positive ? right : left];

            switch (classes[step.pivot]) {
            case VarClass::ALocal:
                gate_of[step.id] = builder.op(GateKind::Or, pos_gate, neg_gate);
                break;
            case VarClass::BLocal:
                gate_of[step.id] = builder.op(GateKind::And, pos_gate, neg_gate);
                break;
            case VarClass::Shared: {
                // pivot true falsifies the positive side, so the negative antecedent decides, and vice versa.
                int when_true = builder.op(GateKind::And, builder.input(step.pivot), neg_gate);
                int when_false = builder.op(GateKind::And, builder.negated_input(step.pivot), pos_gate);
                gate_of[step.id] = builder.op(GateKind::Or, when_true, when_false);
                break;
            }
            }
        }
        return std::move(builder).finish(gate_of[proof.steps.back().id]);
    }

    auto eval_circuit(const Circuit & c, const map<int, bool> & alpha) -> bool
    {
        vector<char> value(c.gates.size(), 0);
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            const auto & g = c.gates[i];
            switch (g.kind) {
            case GateKind::Input: {
                auto it = alpha.find(g.a);
                if (it == alpha.end())
                    throw SplitError(SplitErrc::UnboundInput, "no value for input variable " + std::to_string(g.a), g.a);
                value[i] = it->second;
                break;
            }
            case GateKind::Const: value[i] = g.a != 0; break;
            case GateKind::Not: value[i] = ! value[g.a]; break;
            case GateKind::And: value[i] = value[g.a] && value[g.b]; break;
            case GateKind::Or: value[i] = value[g.a] || value[g.b]; break;
            }
        }
        if (c.output < 0 || static_cast<std::size_t>(c.output) >= value.size())
            throw SplitError(SplitErrc::MalformedFile, "circuit has no output gate");
        return value[c.output];
    }

    namespace
    {
        auto kind_name(GateKind k) -> const char *
        {
            switch (k) {
            case GateKind::Input: return "INPUT";
            case GateKind::Const: return "CONST";
            case GateKind::Not: return "NOT";
            case GateKind::And: return "AND";
            case GateKind::Or: return "OR";
            }
            return "?";
        }

        auto is_operand(GateKind k) -> bool
        {
            return k == GateKind::Not || k == GateKind::And || k == GateKind::Or;
        }
    }

    auto write_circuit(const Circuit & c) -> string
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            const auto & g = c.gates[i];
            out << "g " << i + 1 << ' ' << kind_name(g.kind) << ' ' << (is_operand(g.kind) ? g.a + 1 : g.a);
            if (g.kind == GateKind::And || g.kind == GateKind::Or)
                out << ' ' << g.b + 1;
            out << '\n';
        }
        out << "out " << c.output + 1 << '\n';
        return out.str();
    }

    auto parse_circuit(string_view text) -> Circuit
    {
        Circuit c;
        std::istringstream in{string{text}};
        string line;
        long lineno = 0;
        bool have_output = false;
        auto fail = [&](const string & why) { return SplitError(SplitErrc::MalformedFile, "circuit line " + std::to_string(lineno) + ": " + why, lineno); };

        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream words{line};
            string tag;
            if (! (words >> tag))
                continue;
            if (tag == "out") {
                long id = 0;
                if (have_output || ! (words >> id) || id < 1 || id > static_cast<long>(c.gates.size()))
                    throw fail("bad output");
                c.output = static_cast<int>(id - 1);
                have_output = true;
                continue;
            }
            if (tag != "g" || have_output)
                throw fail("expected a gate line");

            long id = 0;
            string kind;
            if (! (words >> id >> kind) || id != static_cast<long>(c.gates.size()) + 1)
                throw fail("gate ids must be consecutive from 1");
            Gate g;
            int operands = 1;
            if (kind == "INPUT")
                g.kind = GateKind::Input;
            else if (kind == "CONST")
                g.kind = GateKind::Const;
            else if (kind == "NOT")
                g.kind = GateKind::Not;
            else if (kind == "AND" || kind == "OR") {
                g.kind = kind == "AND" ? GateKind::And : GateKind::Or;
                operands = 2;
            }
            else
                throw fail("unknown gate kind " + kind);

            long a = 0, b = 0;
            if (! (words >> a) || (operands == 2 && ! (words >> b)))
                throw fail("missing operand");
            string extra;
            if (words >> extra)
                throw fail("trailing tokens");
            if (is_operand(g.kind)) {
                if (a < 1 || a >= id || (operands == 2 && (b < 1 || b >= id)))
                    throw fail("operand must refer to an earlier gate");
                g.a = static_cast<int>(a - 1);
                g.b = operands == 2 ? static_cast<int>(b - 1) : -1;
            }
            else {
                if ((g.kind == GateKind::Const && a != 0 && a != 1) || (g.kind == GateKind::Input && a < 1))
                    throw fail("bad constant or input variable");
                g.a = static_cast<int>(a);
            }
            c.gates.push_back(g);
        }
        if (! have_output)
            throw SplitError(SplitErrc::MalformedFile, "circuit has no 'out' line", lineno);
        return c;
    }

    auto write_split(const SplitInstance & s) -> string
    {
        std::ostringstream out;
        out << "p-vars:";
        for (int v : s.p_vars)
            out << ' ' << v;
        out << "\na:";
        for (int i : s.a_clauses)
            out << ' ' << i + 1;
        out << "\nb:";
        for (int i : s.b_clauses)
            out << ' ' << i + 1;
        out << '\n';
        return out.str();
    }

    auto parse_split(string_view text, const CnfInstance & cnf) -> SplitInstance
    {
        SplitInstance s;
        s.cnf = cnf;
        std::istringstream in{string{text}};
        string line;
        long lineno = 0;
        std::set<string> seen;

        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == 'c')
                continue;
            auto colon = line.find(':');
            if (colon == string::npos)
                throw SplitError(SplitErrc::MalformedFile, "split line " + std::to_string(lineno) + ": missing ':'", lineno);
            string key = line.substr(first, colon - first);
            if (key != "p-vars" && key != "a" && key != "b")
                throw SplitError(SplitErrc::MalformedFile, "split line " + std::to_string(lineno) + ": unknown key " + key, lineno);
            if (! seen.insert(key).second)
                throw SplitError(SplitErrc::MalformedFile, "split line " + std::to_string(lineno) + ": repeated key " + key, lineno);

            std::istringstream words{line.substr(colon + 1)};
            long value = 0;
            while (words >> value) {
                if (key == "p-vars") {
                    if (value < 1 || value > cnf.num_vars())
                        throw SplitError(SplitErrc::MalformedFile, "split line " + std::to_string(lineno) + ": variable out of range", lineno);
                    s.p_vars.insert(static_cast<int>(value));
                }
                else {
                    if (value < 1 || value > static_cast<long>(cnf.size()))
                        throw SplitError(SplitErrc::MalformedFile, "split line " + std::to_string(lineno) + ": clause index out of range", lineno);
                    (key == "a" ? s.a_clauses : s.b_clauses).push_back(static_cast<int>(value - 1));
                }
            }
            if (! words.eof())
                throw SplitError(SplitErrc::MalformedFile, "split line " + std::to_string(lineno) + ": bad number", lineno);
        }
        if (seen.size() != 3)
            throw SplitError(SplitErrc::MalformedFile, "split file needs p-vars, a and b lines", lineno);
        return s;
    }
}

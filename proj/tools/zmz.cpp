// zmz -- idempotents, CRT, and idempotent lifting in Z/mZ.
//
// Every subcommand prints either human-readable text (default) or, with
// --json, exactly one machine-readable JSON record on stdout. Integers in
// records are exact decimal strings. Exit codes: 0 success, 2 usage or
// validation error, 3 failed mathematical hypothesis.

#include "zmz/arith.hpp"
#include "zmz/crt.hpp"
#include "zmz/errors.hpp"
#include "zmz/idempotents.hpp"
#include "zmz/lifting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using zmz::Int;
using ordered_json = nlohmann::ordered_json;

Int parse_integer(const std::string& text, const std::string& what) {
    std::size_t start = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool ok = text.size() > start;
    for (std::size_t i = start; ok && i < text.size(); ++i)
        ok = text[i] >= '0' && text[i] <= '9';
    if (!ok)
        throw std::invalid_argument(what + ": expected a decimal integer, got \"" + text + "\"");
    return Int(text);
}

Int parse_modulus(const std::string& text) {
    Int m = parse_integer(text, "modulus");
    if (m < 1)
        throw std::invalid_argument("modulus must be >= 1 (Z/0Z is not supported), got " +
                                    m.str());
    return m;
}

void emit(bool json, const ordered_json& record, const std::string& human) {
    if (json)
        std::cout << record.dump() << "\n";
    else
        std::cout << human;
}

std::string str(const Int& v) { return v.str(); }

// ---- factor ----------------------------------------------------------

void run_factor(bool json, const std::string& m_text) {
    Int m = parse_modulus(m_text);
    zmz::Factorization f = zmz::factor(m);

    ordered_json factors = ordered_json::array();
    std::string human = str(m) + " =";
    for (const zmz::PrimePower& pp : f.factors) {
        factors.push_back({{"prime", str(pp.prime)}, {"exponent", std::to_string(pp.exponent)}});
        human += (pp == f.factors.front() ? " " : " * ") + str(pp.prime);
        if (pp.exponent > 1) human += "^" + std::to_string(pp.exponent);
    }
    if (f.factors.empty()) human += " (empty product)";
    human += "\n";

    ordered_json record = {{"command", "factor"},
                           {"inputs", {{"m", str(m)}}},
                           {"result", {{"factors", factors}}}};
    emit(json, record, human);
}

// ---- idempotents -----------------------------------------------------

void run_idempotents(bool json, const std::string& m_text, std::size_t cap, bool basis_only) {
    Int m = parse_modulus(m_text);
    zmz::Factorization f = zmz::factor(m);

    Int count = Int(1) << f.omega();
    ordered_json result = {{"count", str(count)}};
    std::string human;

    zmz::CrtBasis basis =
        basis_only ? zmz::primitive_idempotents(f) : zmz::CrtBasis{};
    std::vector<Int> members;
    if (!basis_only) {
        zmz::IdempotentSet set = zmz::enumerate_idempotents(f, cap);
        basis = std::move(set.basis);
        members = std::move(set.members);
    }

    ordered_json basis_json = ordered_json::array();
    human += "Z/" + str(m) + "Z has " + str(count) + " idempotent(s)\n";
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
        Int pc = f.factors[k].value();
        basis_json.push_back({{"prime_power", str(pc)}, {"element", str(basis.elements[k])}});
        human += "  basis " + str(basis.elements[k]) + "  (1 mod " + str(pc) + ")\n";
    }
    result["basis"] = basis_json;

    if (!basis_only) {
        ordered_json members_json = ordered_json::array();
        human += "  members:";
        for (const Int& e : members) {
            members_json.push_back(str(e));
            human += " " + str(e);
        }
        human += "\n";
        result["members"] = members_json;
    }

    ordered_json record = {
        {"command", "idempotents"},
        {"inputs", {{"m", str(m)}, {"cap", std::to_string(cap)}, {"basis_only", basis_only}}},
        {"result", result}};
    emit(json, record, human);
}

// ---- crt -------------------------------------------------------------

std::vector<zmz::Congruence> parse_congruences(const std::vector<std::string>& args) {
    std::vector<zmz::Congruence> out;
    for (const std::string& arg : args) {
        std::size_t pos = 0;
        while (pos < arg.size()) {
            std::size_t end = arg.find_first_of(", \t", pos);
            if (end == std::string::npos) end = arg.size();
            if (end > pos) {
                std::string token = arg.substr(pos, end - pos);
                std::size_t colon = token.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("congruence \"" + token +
                                                "\" is not of the form r:m");
                Int r = parse_integer(token.substr(0, colon), "remainder");
                Int m = parse_modulus(token.substr(colon + 1));
                out.push_back({std::move(r), std::move(m)});
            }
            pos = end + 1;
        }
    }
    if (out.empty()) throw std::invalid_argument("crt: no congruences given");
    return out;
}

void run_crt(bool json, const std::vector<std::string>& args) {
    zmz::CongruenceSystem system{parse_congruences(args)};
    zmz::Residue x = zmz::crt_solve(system);

    ordered_json constraints = ordered_json::array();
    for (const zmz::Congruence& c : system.constraints)
        constraints.push_back({{"remainder", str(c.remainder)}, {"modulus", str(c.modulus)}});

    std::string human = "x = " + str(x.value()) + " (mod " + str(x.modulus()) +
                        ")\nall solutions: " + str(x.value()) + " + " + str(x.modulus()) +
                        "Z\n";
    ordered_json record = {
        {"command", "crt"},
        {"inputs", {{"constraints", constraints}}},
        {"result", {{"solution", str(x.value())}, {"modulus", str(x.modulus())}}}};
    emit(json, record, human);
}

// ---- lift ------------------------------------------------------------

void run_lift(bool json, const std::string& f_text, const std::string& m_text) {
    Int m = parse_modulus(m_text);
    Int f = parse_integer(f_text, "f");
    zmz::LiftResult lift = zmz::lift_idempotent(zmz::Residue(f, m));

    std::string human = "g = " + str(lift.lifted.value()) + " (mod " + str(m) + ")\nf - g = " +
                        str(lift.difference.value()) + " (nilpotent)\nnewton steps: " +
                        std::to_string(lift.iterations) + "\n";
    ordered_json record = {{"command", "lift"},
                           {"inputs", {{"f", str(zmz::mod_floor(f, m))}, {"m", str(m)}}},
                           {"result",
                            {{"lifted", str(lift.lifted.value())},
                             {"difference", str(lift.difference.value())},
                             {"iterations", std::to_string(lift.iterations)}}}};
    emit(json, record, human);
}

// ---- nilpotents ------------------------------------------------------

void run_nilpotents(bool json, const std::string& m_text) {
    Int m = parse_modulus(m_text);
    zmz::Nilradical nil = zmz::nilradical(zmz::factor(m));

    std::string human = "nilradical of Z/" + str(m) + "Z is generated by " +
                        str(nil.generator) + "\nnilpotent elements: " +
                        str(nil.nilpotent_count) + "\n";
    ordered_json record = {
        {"command", "nilpotents"},
        {"inputs", {{"m", str(m)}}},
        {"result",
         {{"generator", str(nil.generator)}, {"count", str(nil.nilpotent_count)}}}};
    emit(json, record, human);
}

// ---- boolean ---------------------------------------------------------

void run_boolean(bool json, const std::string& op, const std::vector<std::string>& args) {
    const bool unary = op == "complement";
    const std::size_t want = unary ? 2 : 3;
    if (args.size() != want)
        throw std::invalid_argument("boolean " + op + " takes " +
                                    (unary ? std::string("<a> <m>") : std::string("<a> <b> <m>")));

    Int m = parse_modulus(args.back());
    zmz::Residue a(parse_integer(args[0], "a"), m);
    ordered_json inputs = {{"op", op}, {"a", str(a.value())}};

    zmz::Residue out = a;
    if (unary) {
        out = zmz::complement(a);
    } else {
        zmz::Residue b(parse_integer(args[1], "b"), m);
        inputs["b"] = str(b.value());
        if (op == "meet")
            out = zmz::meet(a, b);
        else if (op == "join")
            out = zmz::join(a, b);
        else if (op == "xor")
            out = zmz::xor_add(a, b);
        else
            throw std::invalid_argument("unknown boolean op \"" + op +
                                        "\" (expected meet, join, complement, or xor)");
    }
    inputs["m"] = str(m);

    ordered_json record = {
        {"command", "boolean"}, {"inputs", inputs}, {"result", {{"value", str(out.value())}}}};
    emit(json, record, str(out.value()) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"idempotents, Chinese remaindering, and idempotent lifting in Z/mZ"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "emit one machine-readable JSON record on stdout");

    std::string m_text, f_text, op_text;
    std::size_t cap = zmz::kDefaultEnumerationCap;
    bool basis_only = false;
    std::vector<std::string> rest;

    CLI::App* factor_cmd = app.add_subcommand("factor", "prime factorization of m");
    factor_cmd->add_option("m", m_text, "modulus, >= 1")->required();

    CLI::App* idem_cmd =
        app.add_subcommand("idempotents", "all idempotents of Z/mZ with their CRT basis");
    idem_cmd->add_option("m", m_text, "modulus, >= 1")->required();
    idem_cmd->add_option("--cap", cap, "max distinct primes before enumeration is refused");
    idem_cmd->add_flag("--basis-only", basis_only,
                       "print the primitive idempotents only (no 2^n enumeration)");

    CLI::App* crt_cmd =
        app.add_subcommand("crt", "solve x ≡ r (mod m) for pairwise coprime moduli");
    crt_cmd->add_option("pairs", rest, "congruences as r:m tokens (comma or space separated)")
        ->required();

    CLI::App* lift_cmd =
        app.add_subcommand("lift", "lift f to the idempotent g of Z/mZ with f - g nilpotent");
    lift_cmd->add_option("f", f_text, "element to lift")->required();
    lift_cmd->add_option("m", m_text, "modulus, >= 1")->required();

    CLI::App* nil_cmd =
        app.add_subcommand("nilpotents", "generator and size of the nilradical of Z/mZ");
    nil_cmd->add_option("m", m_text, "modulus, >= 1")->required();

    CLI::App* bool_cmd = app.add_subcommand(
        "boolean", "Boolean algebra on idempotents: meet|join|complement|xor");
    bool_cmd->add_option("op", op_text, "one of meet, join, complement, xor")->required();
    bool_cmd->add_option("args", rest, "<a> [b] <m>")->required();

    try {
        app.parse(argc, argv);
        if (factor_cmd->parsed())
            run_factor(json, m_text);
        else if (idem_cmd->parsed())
            run_idempotents(json, m_text, cap, basis_only);
        else if (crt_cmd->parsed())
            run_crt(json, rest);
        else if (lift_cmd->parsed())
            run_lift(json, f_text, m_text);
        else if (nil_cmd->parsed())
            run_nilpotents(json, m_text);
        else if (bool_cmd->parsed())
            run_boolean(json, op_text, rest);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

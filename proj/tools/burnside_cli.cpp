// Command-line front end for the Burnside ring engine: group tables,
// ring arithmetic, Tambara norms, and the localization criterion checker
// with divisibility certificates.

#include <CLI11.hpp>

#include <burnside/burnside.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace burnside;

std::string format_perm(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (unsigned start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == start) continue;
        out += "(";
        unsigned cur = start;
        bool first = true;
        do {
            seen[cur] = true;
            if (!first) out += " ";
            out += std::to_string(cur + 1);
            first = false;
            cur = p[cur];
        } while (cur != start);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// Greedy small generating set for a subgroup, for display.
std::vector<unsigned> subgroup_generators(const FiniteGroup& g, const Subgroup& h) {
    std::vector<unsigned> gens;
    Subgroup have = trivial_subgroup(g);
    for (unsigned e : h.members) {
        if (have.contains(e)) continue;
        gens.push_back(e);
        std::vector<unsigned> seed = have.members;
        seed.push_back(e);
        have = generated_subgroup(g, seed);
        if (have == h) break;
    }
    return gens;
}

std::string class_label(const FiniteGroup& g, const Subgroup& h) {
    if (h.order() == 1) return "e";
    if (h.order() == g.order()) return "G";
    std::string out;
    for (unsigned e : subgroup_generators(g, h)) {
        if (!out.empty()) out += ",";
        out += format_perm(g.perm(e));
    }
    return "<" + out + ">";
}

void print_group_info(std::ostream& os, const std::string& spec,
                      const BurnsideRing& ring) {
    const FiniteGroup& g = ring.group();
    os << "group " << spec << "\n";
    os << "order " << g.order() << "\n";
    os << "degree " << g.degree() << "\n";
    os << "subgroup classes " << ring.rank() << "\n";
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        const auto& c = ring.classes().cls(i);
        os << "  class " << i << ": |H| = " << c.representative.order()
           << ", class size " << c.members.size() << ", |N(H)/H| = "
           << c.normalizer_quotient << ", H = "
           << class_label(g, c.representative) << "\n";
    }
    os << "table of marks (rows [G/H], columns K):\n";
    for (std::size_t i = 0; i < ring.rank(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < ring.rank(); ++j) {
            if (j) os << " ";
            os << ring.mark_entry(i, j).get_str();
        }
        os << "\n";
    }
}

void print_element(std::ostream& os, const std::string& label,
                   const BurnsideElement& x) {
    os << label << " " << format_element(x);
    if (auto pretty = pretty_rank2(x)) os << "  (" << *pretty << ")";
    os << "\n";
}

void print_verdict_text(std::ostream& os, const BurnsideRing& ring,
                        const Verdict& verdict) {
    for (const auto& w : verdict.witnesses) {
        os << "class " << w.subgroup_class << " generator " << w.generator_index
           << ": norm " << format_element(w.normed) << " divides product with exponents [";
        for (std::size_t i = 0; i < w.exponents.size(); ++i) {
            if (i) os << ", ";
            os << w.exponents[i];
        }
        os << "], cofactor " << format_element(w.cofactor);
        if (auto pretty = pretty_rank2(w.cofactor)) os << " (" << *pretty << ")";
        os << "\n";
    }
    if (verdict.obstruction)
        os << "obstruction: class " << verdict.obstruction->subgroup_class
           << " generator " << verdict.obstruction->generator_index
           << " has zero mark at coordinate " << verdict.obstruction->coordinate
           << " while every generator's mark there is nonzero\n";
    if (verdict.exhausted)
        os << "bounds exhausted at class " << verdict.exhausted->first
           << " generator " << verdict.exhausted->second << "\n";
    os << "verdict " << verdict_name(verdict.kind) << "\n";
}

int verdict_exit_code(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::Safe: return 0;
        case Verdict::Kind::Unknown: return 2;
        default: return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burnside rings, Tambara norms, and the localization criterion"};
    app.require_subcommand(1);

    std::string group_spec = "C2";
    std::string format = "text";
    std::size_t order_bound = kDefaultOrderBound;
    unsigned kmax = 64, max_word = 8, depth = 1;
    long n_value = 2;
    std::size_t class_index = 0;
    std::vector<std::string> elts;
    std::string cert_path;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_spec, "group preset or perm:<degree>:<cycles>");
        cmd->add_option("--order-bound", order_bound, "group order bound");
    };

    auto* info = app.add_subcommand("group-info", "order, subgroup classes, table of marks");
    add_group(info);

    auto* marks_cmd = app.add_subcommand("marks", "ghost coordinates of an element");
    add_group(marks_cmd);
    marks_cmd->add_option("--elt", elts, "element as [c0, c1, ...]")->required()->allow_extra_args(false);

    auto* mul_cmd = app.add_subcommand("mul", "product of two elements");
    add_group(mul_cmd);
    mul_cmd->add_option("--elt", elts, "two elements")->required()->allow_extra_args(false)->expected(2);

    auto* norm_cmd = app.add_subcommand("norm", "multiplicative induction N_H^G");
    add_group(norm_cmd);
    norm_cmd->add_option("--class", class_index, "subgroup class index of H")->required();
    norm_cmd->add_option("--elt", elts, "element of A(H)")->required()->allow_extra_args(false);

    auto* invert_cmd = app.add_subcommand("check-invert", "criterion for inverting an integer");
    add_group(invert_cmd);
    invert_cmd->add_option("--n", n_value, "integer to invert, >= 2")->required();
    invert_cmd->add_option("--kmax", kmax, "power search bound");
    invert_cmd->add_option("--format", format, "text|structured");

    auto* set_cmd = app.add_subcommand("check-set", "criterion for a set S of elements");
    add_group(set_cmd);
    set_cmd->add_option("--elt", elts, "elements of S")->required()->allow_extra_args(false);
    set_cmd->add_option("--kmax", kmax, "power search bound when |S| = 1");
    set_cmd->add_option("--max-word", max_word, "total-degree bound for mixed products");
    set_cmd->add_option("--format", format, "text|structured");

    auto* closure_cmd = app.add_subcommand("closure", "multiplicative-closure fragment");
    add_group(closure_cmd);
    closure_cmd->add_option("--elt", elts, "elements of S")->required()->allow_extra_args(false);
    closure_cmd->add_option("--depth", depth, "closure depth")->required();

    auto* verify_cmd = app.add_subcommand("verify", "re-validate a Safe certificate");
    verify_cmd->add_option("--cert", cert_path, "certificate file ('-' for stdin)")->required();
    verify_cmd->add_option("--order-bound", order_bound, "group order bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_cmd->parsed()) {
            ParsedCertificate cert;
            if (cert_path == "-") {
                cert = parse_certificate(std::cin);
            } else {
                std::ifstream in(cert_path);
                if (!in) throw ParseError("cannot open certificate file: " + cert_path);
                cert = parse_certificate(in);
            }
            std::string why;
            if (verify_certificate(cert, order_bound, &why)) {
                std::cout << "certificate OK\n";
                return 0;
            }
            std::cout << "certificate INVALID: " << why << "\n";
            return 1;
        }

        auto ring = BurnsideRing::create(parse_group_spec(group_spec, order_bound));

        if (info->parsed()) {
            print_group_info(std::cout, group_spec, *ring);
            return 0;
        }
        if (marks_cmd->parsed()) {
            auto x = parse_element(ring, elts.at(0));
            std::cout << "marks " << format_coeffs(ring->marks(x)) << "\n";
            return 0;
        }
        if (mul_cmd->parsed()) {
            auto x = parse_element(ring, elts.at(0));
            auto y = parse_element(ring, elts.at(1));
            print_element(std::cout, "product", x * y);
            return 0;
        }
        if (norm_cmd->parsed()) {
            if (class_index >= ring->rank())
                throw IndexOutOfRange("class index out of range");
            SubgroupContext ctx(ring, ring->classes().cls(class_index).representative);
            auto x = parse_element(ctx.sub_ring_ptr(), elts.at(0));
            auto result = norm(ctx, x);
            print_element(std::cout, "norm", result);
            std::cout << "marks " << format_coeffs(ring->marks(result)) << "\n";
            return 0;
        }
        if (invert_cmd->parsed()) {
            if (n_value < 2) throw ParseError("--n must be at least 2");
            LocalizationProblem problem{ring, {ring->integer(n_value)}, kmax, kmax};
            auto report = invert_integer_report(ring, n_value, kmax);
            if (format == "structured") {
                write_certificate(std::cout, group_spec, problem, report.verdict);
            } else {
                std::cout << "inverting " << n_value << " over " << group_spec << "\n";
                for (const auto& row : report.rows) {
                    std::cout << "class " << row.subgroup_class << ": N_H(" << n_value
                              << ") = " << format_element(row.normed) << ", k = "
                              << row.exponent << ", cofactor "
                              << format_element(row.cofactor);
                    if (auto pretty = pretty_rank2(row.cofactor))
                        std::cout << " (" << *pretty << ")";
                    std::cout << "\n";
                }
                print_verdict_text(std::cout, *ring, report.verdict);
            }
            return verdict_exit_code(report.verdict);
        }
        if (set_cmd->parsed()) {
            std::vector<BurnsideElement> gens;
            for (const auto& e : elts) gens.push_back(parse_element(ring, e));
            LocalizationProblem problem{ring, std::move(gens), kmax, max_word};
            auto verdict = check_criterion(problem);
            if (format == "structured")
                write_certificate(std::cout, group_spec, problem, verdict);
            else
                print_verdict_text(std::cout, *ring, verdict);
            return verdict_exit_code(verdict);
        }
        if (closure_cmd->parsed()) {
            std::vector<BurnsideElement> gens;
            for (const auto& e : elts) gens.push_back(parse_element(ring, e));
            LocalizationProblem problem{ring, std::move(gens), kmax, max_word};
            for (const auto& x : closure_enumerate(problem, depth))
                print_element(std::cout, "element", x);
            return 0;
        }
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

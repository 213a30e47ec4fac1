#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polydual/coupling.hpp"
#include "polydual/errors.hpp"
#include "polydual/registry.hpp"

using namespace polydual;

namespace {

constexpr int kExitPredicateFalse = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 3;

std::vector<Int> parse_ints(const std::string& s, char sep) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) throw BadInput("empty entry in '" + s + "'");
        out.emplace_back(item);
    }
    return out;
}

// "w1,w2,w3:d" or "a0,a1,a2,a3:d"
std::pair<std::vector<Int>, Int> parse_weight_syntax(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw BadInput("weight system must look like w1,...,wk:d");
    return {parse_ints(s.substr(0, colon), ','), Int(s.substr(colon + 1))};
}

LatticeBasis parse_basis(const std::string& s) {
    std::vector<IntVec4> rows;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto v = parse_ints(item, ',');
        if (v.size() != 4) throw BadInput("basis row must have 4 entries");
        rows.push_back({v[0], v[1], v[2], v[3]});
    }
    if (rows.size() != 3) throw BadInput("basis must have 3 rows separated by ';'");
    return LatticeBasis{{rows[0], rows[1], rows[2]}};
}

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << "/" << rat_den(q);
    return os.str();
}

std::string verts_str(const std::vector<IntVec3>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    return os.str();
}

void print_report(const CaseReport& rep, const CaseRecord& rec, bool as_json) {
    if (as_json) {
        std::cout << case_report_to_json(rep, rec).dump() << "\n";
        return;
    }
    std::cout << "case " << rep.case_no << ": " << rep.pairs.size() << " dual pair"
              << (rep.pairs.size() == 1 ? "" : "s") << " (claimed " << rep.expected_count
              << ", listed " << rep.n_expected << "), enumerated " << rep.enum_a << "x"
              << rep.enum_b << " [" << rep.millis << " ms]\n";
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto& pr = rep.pairs[i];
        bool extra = std::find(rep.extra.begin(), rep.extra.end(), i) != rep.extra.end();
        std::cout << "  pair" << (extra ? " (extra)" : "") << ": "
                  << verts_str(pr.delta.vertices()) << "  <->  "
                  << verts_str(pr.delta_prime.vertices()) << "\n";
    }
    for (auto e : rep.missing)
        std::cout << "  MISSING listed pair: " << verts_str(rec.expected_pairs[e].first)
                  << "  <->  " << verts_str(rec.expected_pairs[e].second) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact lattice-polytope duality toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string in_path, a_path, b_path, inner_path, outer_path;
    std::string weight_arg, basis_arg, w_arg, wp_arg, square_arg;
    std::string registry_path = "data/registry.json";
    int case_no = 0;
    bool all_cases = false;

    auto* cmd_dual = app.add_subcommand("dual", "polar dual of a polytope");
    cmd_dual->add_option("-i,--input", in_path, "polytope JSON file")->required();

    auto* cmd_refl = app.add_subcommand("reflexive", "reflexivity predicate");
    cmd_refl->add_option("-i,--input", in_path, "polytope JSON file")->required();

    auto* cmd_iso = app.add_subcommand("iso", "unimodular isomorphism between two polytopes");
    cmd_iso->add_option("-a", a_path, "first polytope")->required();
    cmd_iso->add_option("-b", b_path, "second polytope")->required();

    auto* cmd_amb = app.add_subcommand("ambient", "ambient polytope of a weight system");
    cmd_amb->add_option("-w,--weights", weight_arg, "a0,a1,a2,a3:d")->required();
    cmd_amb->add_option("--basis", basis_arg, "b1;b2;b3 rows of a kernel basis");

    auto* cmd_newton = app.add_subcommand("newton", "Newton polytope of a polynomial");
    cmd_newton->add_option("-i,--input", in_path, "polynomial JSON file")->required();
    cmd_newton->add_option("--basis", basis_arg, "b1;b2;b3 rows of a kernel basis");

    auto* cmd_between = app.add_subcommand("between", "reflexive polytopes between two bounds");
    cmd_between->add_option("--inner", inner_path, "inner polytope JSON")->required();
    cmd_between->add_option("--outer", outer_path, "outer polytope JSON")->required();

    auto* cmd_coupling = app.add_subcommand("coupling", "weighted magic squares of a pair");
    cmd_coupling->add_option("--w", w_arg, "w1,w2,w3:d")->required();
    cmd_coupling->add_option("--wp", wp_arg, "w1,w2,w3:h")->required();
    cmd_coupling->add_option("--square", square_arg, "c11,c12,...,c33 to test");

    auto* cmd_verify = app.add_subcommand("verify-case", "re-run one or all numbered cases");
    cmd_verify->add_option("case", case_no, "case number (1..51)");
    cmd_verify->add_flag("--all", all_cases, "run every case");
    cmd_verify->add_option("--registry", registry_path, "registry JSON path");

    CLI11_PARSE(app, argc, argv);

    if (cmd_dual->parsed()) {
        auto p = polytope_from_json(load_json_file(in_path));
        auto d = polar_dual(p);
        if (as_json) {
            std::cout << to_json(d).dump() << "\n";
        } else {
            for (const auto& v : d.vertices)
                std::cout << "(" << rat_str(v[0]) << ", " << rat_str(v[1]) << ", "
                          << rat_str(v[2]) << ")\n";
        }
        return 0;
    }
    if (cmd_refl->parsed()) {
        auto p = polytope_from_json(load_json_file(in_path));
        bool refl = is_reflexive(p);
        if (as_json) {
            json j{{"reflexive", refl}};
            if (!refl && p.origin_interior()) {
                for (std::size_t i = 0; i < p.facets().size(); ++i)
                    if (p.facets()[i].offset != 1) {
                        auto v = facet_dual_vertex(p, i);
                        j["offending_dual_vertex"] = json::array(
                            {rat_str(v[0]), rat_str(v[1]), rat_str(v[2])});
                        break;
                    }
            }
            std::cout << j.dump() << "\n";
        } else if (refl) {
            std::cout << "reflexive\n";
        } else if (!p.origin_interior()) {
            std::cout << "not reflexive: origin is not strictly interior\n";
        } else {
            for (std::size_t i = 0; i < p.facets().size(); ++i)
                if (p.facets()[i].offset != 1) {
                    auto v = facet_dual_vertex(p, i);
                    std::cout << "not reflexive: facet dual vertex (" << rat_str(v[0]) << ", "
                              << rat_str(v[1]) << ", " << rat_str(v[2]) << ") is not integral\n";
                    break;
                }
        }
        return refl ? 0 : kExitPredicateFalse;
    }
    if (cmd_iso->parsed()) {
        auto p = polytope_from_json(load_json_file(a_path));
        auto q = polytope_from_json(load_json_file(b_path));
        auto m = find_unimodular_map(p, q);
        if (as_json) {
            json j{{"isomorphic", m.has_value()}};
            if (m) {
                json rows = json::array();
                for (const auto& r : m->matrix) rows.push_back(to_json(r));
                j["matrix"] = rows;
            }
            std::cout << j.dump() << "\n";
        } else if (m) {
            for (const auto& r : m->matrix) std::cout << r << "\n";
        } else {
            std::cout << "none\n";
        }
        return m ? 0 : kExitPredicateFalse;
    }
    if (cmd_amb->parsed() || cmd_newton->parsed()) {
        LatticePolytope p = [&] {
            if (cmd_amb->parsed()) {
                auto [ws, d] = parse_weight_syntax(weight_arg);
                if (ws.size() != 4) throw BadInput("ambient needs four weights");
                WeightSystem4 w({ws[0], ws[1], ws[2], ws[3]}, d);
                LatticeBasis basis =
                    basis_arg.empty() ? kernel_basis(w.a) : parse_basis(basis_arg);
                if (!spans_kernel_lattice(basis, w.a))
                    throw BadInput("basis does not span the kernel lattice of the weight");
                return ambient_polytope(w, basis);
            }
            auto f = polynomial_from_json(load_json_file(in_path));
            LatticeBasis basis =
                basis_arg.empty() ? kernel_basis(f.weight.a) : parse_basis(basis_arg);
            if (!spans_kernel_lattice(basis, f.weight.a))
                throw BadInput("basis does not span the kernel lattice of the weight");
            return newton_polytope(f, basis);
        }();
        if (as_json) std::cout << to_json(p).dump() << "\n";
        else std::cout << verts_str(p.vertices()) << "\n";
        return 0;
    }
    if (cmd_between->parsed()) {
        auto inner = polytope_from_json(load_json_file(inner_path));
        auto outer = polytope_from_json(load_json_file(outer_path));
        auto list = enumerate_reflexive_between(inner, outer);
        if (as_json) {
            json arr = json::array();
            for (const auto& p : list) arr.push_back(to_json(p)["vertices"]);
            std::cout << json{{"reflexive", arr}}.dump() << "\n";
        } else {
            std::cout << list.size() << " reflexive polytope" << (list.size() == 1 ? "" : "s")
                      << "\n";
            for (const auto& p : list) std::cout << "  " << verts_str(p.vertices()) << "\n";
        }
        return 0;
    }
    if (cmd_coupling->parsed()) {
        auto [wv, d] = parse_weight_syntax(w_arg);
        auto [wv2, h] = parse_weight_syntax(wp_arg);
        if (wv.size() != 3 || wv2.size() != 3) throw BadInput("coupling needs three weights per side");
        WeightSystem3 w({wv[0], wv[1], wv[2]}, d);
        WeightSystem3 w2({wv2[0], wv2[1], wv2[2]}, h);
        if (!square_arg.empty()) {
            auto e = parse_ints(square_arg, ',');
            if (e.size() != 9) throw BadInput("--square needs nine entries");
            MagicSquare sq{{IntVec3{e[0], e[1], e[2]}, IntVec3{e[3], e[4], e[5]},
                            IntVec3{e[6], e[7], e[8]}}};
            bool magic = is_weighted_magic_square(sq, w, w2);
            bool coupled = magic && is_coupled(sq, w, w2);
            bool strong = coupled && is_strongly_coupled(sq, w, w2);
            if (as_json)
                std::cout << json{{"magic", magic}, {"coupled", coupled}, {"strongly_coupled", strong}}.dump()
                          << "\n";
            else
                std::cout << "magic=" << (magic ? "yes" : "no")
                          << " coupled=" << (coupled ? "yes" : "no")
                          << " strongly_coupled=" << (strong ? "yes" : "no") << "\n";
            return magic ? 0 : kExitPredicateFalse;
        }
        auto squares = find_magic_squares(w, w2);
        std::size_t coupled = 0, strong = 0;
        json arr = json::array();
        for (const auto& sq : squares) {
            bool c = is_coupled(sq, w, w2);
            bool s = c && is_strongly_coupled(sq, w, w2);
            coupled += c;
            strong += s;
            if (as_json) {
                json rows = json::array();
                for (const auto& r : sq.c) rows.push_back(to_json(r));
                arr.push_back(json{{"square", rows}, {"coupled", c}, {"strongly_coupled", s}});
            } else if (c) {
                std::cout << (s ? "strongly coupled" : "coupled") << ":";
                for (const auto& r : sq.c) std::cout << " " << r;
                std::cout << "\n";
            }
        }
        if (as_json)
            std::cout << json{{"count", squares.size()}, {"coupled", coupled},
                              {"strongly_coupled", strong}, {"squares", arr}}.dump()
                      << "\n";
        else
            std::cout << squares.size() << " magic squares, " << coupled << " coupled, " << strong
                      << " strongly coupled\n";
        return 0;
    }
    if (cmd_verify->parsed()) {
        if (!all_cases && case_no == 0)
            throw BadInput("verify-case needs a case number or --all");
        Registry reg = load_registry(registry_path);
        std::vector<const CaseRecord*> todo;
        for (const auto& rec : reg.cases)
            if (all_cases || rec.case_no == case_no) todo.push_back(&rec);
        if (todo.empty()) throw BadInput("no such case in the registry");

        std::vector<CaseReport> reports(todo.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= todo.size()) return;
                reports[i] = verify_case(*todo[i]);
            }
        };
        unsigned n_threads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                                static_cast<unsigned>(todo.size()));
        if (n_threads > 1) {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        } else {
            worker();
        }

        bool all_match = true;
        for (std::size_t i = 0; i < todo.size(); ++i) {
            print_report(reports[i], *todo[i], as_json);
            all_match = all_match && reports[i].matches_expectation();
        }
        if (!as_json && all_cases) {
            std::cout << "negative cases:";
            for (const auto& r : reports)
                if (r.pairs.empty()) std::cout << " " << r.case_no;
            std::cout << "\n";
        }
        return all_match ? 0 : kExitMismatch;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

// Unified command-line front end.  Every command reads JSON from stdin
// (when it takes input at all) and writes JSON to stdout or --output;
// identical flags and inputs give byte-identical outputs.
//
// Exit codes: 0 success, 1 internal failure or failed acceptance run,
// 2 invalid input, 3 contract violation, 4 term budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "detlab/acceptance.hpp"
#include "detlab/budget.hpp"
#include "detlab/errors.hpp"
#include "detlab/hasse.hpp"
#include "detlab/json_io.hpp"
#include "detlab/straighten.hpp"

namespace {

using detlab::Json;

Json input_json() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return detlab::parse_json_text(ss.str());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object())
        throw detlab::ParseError(std::string("expected a JSON object with field \"") +
                                 key + "\"");
    const auto it = j.find(key);
    if (it == j.end())
        throw detlab::ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

int field_int(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw detlab::ParseError(std::string("field \"") + key +
                                 "\" must be an integer");
    return v.get<int>();
}

const Json& field_array(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array())
        throw detlab::ParseError(std::string("field \"") + key +
                                 "\" must be an array");
    return v;
}

bool field_bool_or(const Json& j, const char* key, bool fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_boolean())
        throw detlab::ParseError(std::string("field \"") + key +
                                 "\" must be a boolean");
    return v.get<bool>();
}

void emit(const Json& j, const std::string& path) {
    const std::string text = detlab::dump_json(j);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw detlab::InputError("cannot open output file: " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    using namespace detlab;

    CLI::App app{"detlab: exact straightening, degeneration, and certificate workbench"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    if (const char* env = std::getenv("DETLAB_SEED"))
        seed = std::strtoull(env, nullptr, 10);
    long long budget = 0;
    std::string output_path;
    app.add_option("--seed", seed, "seed for randomized commands (default: DETLAB_SEED or 0)");
    app.add_option("--budget", budget, "polynomial term budget, 0 = unlimited");
    app.add_option("--output", output_path, "write the output JSON to a file instead of stdout");

    std::function<Json()> selected;
    int exit_override = 0;

    // --- straighten -------------------------------------------------------
    auto* cmd_straighten =
        app.add_subcommand("straighten", "expand a polynomial over standard bideterminants");
    cmd_straighten->fallthrough();
    cmd_straighten->callback([&] {
        selected = [] { return bidet_to_json(straighten(poly_from_json(input_json()))); };
    });

    // --- ideal-member -----------------------------------------------------
    auto* cmd_member =
        app.add_subcommand("ideal-member", "decide membership in the width-r determinantal ideal");
    cmd_member->fallthrough();
    int member_r = 0;
    cmd_member->add_option("--r", member_r, "ideal width")->required();
    cmd_member->callback([&] {
        selected = [&] {
            const Poly f = poly_from_json(input_json());
            Json out = Json::object();
            out["member"] = is_in_det_ideal(f, member_r);
            out["min_width"] = f.is_zero() ? 0 : straighten(f).min_width();
            return out;
        };
    });

    // --- reduce -----------------------------------------------------------
    auto* cmd_reduce =
        app.add_subcommand("reduce", "degenerate an ideal element to a single bideterminant");
    cmd_reduce->fallthrough();
    int reduce_r = 0;
    cmd_reduce->add_option("--r", reduce_r, "ideal width")->required();
    cmd_reduce->callback([&] {
        selected = [&] {
            return reduction_to_json(
                reduce_to_single_bideterminant(poly_from_json(input_json()), reduce_r));
        };
    });

    // --- compose-oracle ----------------------------------------------------
    auto* cmd_compose =
        app.add_subcommand("compose-oracle", "fold an ideal element around an oracle program");
    cmd_compose->fallthrough();
    std::string compose_target;
    int compose_r = 0;
    cmd_compose->add_option("--target", compose_target, "oracle model")
        ->required()
        ->check(CLI::IsMember({"det", "imm", "abp"}));
    cmd_compose->add_option("--r", compose_r, "oracle vertex budget")->required();
    cmd_compose->callback([&] {
        selected = [&] {
            const Json in = input_json();
            const Poly f = poly_from_json(field(in, "f"));
            const int characteristic =
                in.contains("characteristic") ? field_int(in, "characteristic") : 0;
            if (compose_target == "abp")
                return circuit_to_json(compose_projection(
                    f, compose_r, abp_from_json(field(in, "abp")), characteristic));
            if (compose_target == "det")
                return circuit_to_json(
                    proj_to_det(f, compose_r, field_int(in, "t"), characteristic));
            return circuit_to_json(proj_to_imm(f, compose_r, field_int(in, "w"),
                                               field_int(in, "d"), characteristic));
        };
    });

    // --- pfaffian ----------------------------------------------------------
    auto* cmd_pf = app.add_subcommand("pfaffian", "skew-symmetric analogues");
    cmd_pf->fallthrough();
    cmd_pf->require_subcommand(1);

    auto* pf_eval = cmd_pf->add_subcommand("eval", "Pfaffian of a skew matrix");
    pf_eval->fallthrough();
    pf_eval->callback([&] {
        selected = [] {
            Json out = Json::object();
            out["pfaffian"] = poly_to_json(pfaffian(skew_from_json(input_json())));
            return out;
        };
    });

    auto* pf_straighten =
        cmd_pf->add_subcommand("straighten", "expand over standard Pfaffian monomials");
    pf_straighten->fallthrough();
    pf_straighten->callback([&] {
        selected = [] { return stdmon_to_json(pfaff_straighten(poly_from_json(input_json()))); };
    });

    auto* pf_reduce =
        cmd_pf->add_subcommand("reduce", "degenerate to a single standard monomial");
    pf_reduce->fallthrough();
    int pf_reduce_r = 0;
    pf_reduce->add_option("--r", pf_reduce_r, "sub-Pfaffian order")->required();
    pf_reduce->callback([&] {
        selected = [&] {
            return reduction_to_json(pfaff_reduce(poly_from_json(input_json()), pf_reduce_r));
        };
    });

    auto* pf_embed =
        cmd_pf->add_subcommand("embed", "embed a square matrix into a skew one");
    pf_embed->fallthrough();
    pf_embed->callback([&] {
        selected = [] {
            return skew_to_json(subpfaff_embed(poly_matrix_from_json(input_json())));
        };
    });

    auto* pf_compose =
        cmd_pf->add_subcommand("compose", "fold a sub-Pfaffian ideal element around a program");
    pf_compose->fallthrough();
    int pf_compose_r = 0;
    pf_compose->add_option("--r", pf_compose_r, "oracle vertex budget")->required();
    pf_compose->callback([&] {
        selected = [&] {
            const Json in = input_json();
            const Poly f = poly_from_json(field(in, "f"));
            const int characteristic =
                in.contains("characteristic") ? field_int(in, "characteristic") : 0;
            return circuit_to_json(pfaff_compose(
                f, pf_compose_r, abp_from_json(field(in, "abp")), characteristic));
        };
    });

    // --- derivative-dim ----------------------------------------------------
    auto* cmd_dim =
        app.add_subcommand("derivative-dim", "dimension of the span of Hasse derivatives");
    cmd_dim->fallthrough();
    int dim_order = 0;
    auto* dim_order_opt = cmd_dim->add_option("--order", dim_order, "derivative order bound");
    cmd_dim->callback([&] {
        selected = [&] {
            const Poly f = poly_from_json(input_json());
            std::optional<int> order;
            if (dim_order_opt->count() > 0) order = dim_order;
            Json out = Json::object();
            out["dim"] = deriv_space_dim(f, order);
            out["order"] = order ? Json(*order) : Json(nullptr);
            return out;
        };
    });

    // --- pit ----------------------------------------------------------------
    auto* cmd_pit = app.add_subcommand("pit", "identity-testing generators and condensers");
    cmd_pit->fallthrough();
    cmd_pit->require_subcommand(1);
    int pit_n = 0, pit_k = 0, pit_r = 0;

    auto* pit_gen = cmd_pit->add_subcommand("gen", "expand the rank-r product map");
    pit_gen->fallthrough();
    pit_gen->callback([&] {
        selected = [] {
            const MatrixGenerator g = generator_from_json(input_json());
            Json out = Json::object();
            out["generator"] = generator_to_json(g);
            out["coordinates"] = poly_matrix_to_json(expand_generator(g));
            return out;
        };
    });

    auto* pit_apply = cmd_pit->add_subcommand("apply", "compose a polynomial with the product map");
    pit_apply->fallthrough();
    pit_apply->callback([&] {
        selected = [] {
            const Json in = input_json();
            Json out = Json::object();
            out["result"] = poly_to_json(apply_generator(
                poly_from_json(field(in, "f")), generator_from_json(field(in, "generator"))));
            return out;
        };
    });

    auto* pit_recursive = cmd_pit->add_subcommand("recursive", "compose square product maps");
    pit_recursive->fallthrough();
    auto* pit_rec_n = pit_recursive->add_option("--n", pit_n, "output arity");
    auto* pit_rec_k = pit_recursive->add_option("--k", pit_k, "stage count");
    pit_recursive->callback([&] {
        selected = [&] {
            const Json in = input_json();
            const int n = pit_rec_n->count() ? pit_n : field_int(in, "n");
            const int k = pit_rec_k->count() ? pit_k : field_int(in, "k");
            std::vector<int> schedule;
            for (const Json& e : field_array(in, "schedule")) {
                if (!e.is_number_integer())
                    throw ParseError("schedule entries must be integers");
                schedule.push_back(e.get<int>());
            }
            return recursive_to_json(recursive_generator(n, k, schedule));
        };
    });

    auto* pit_condenser = cmd_pit->add_subcommand("condenser", "folded-Vandermonde rank condenser");
    pit_condenser->fallthrough();
    auto* pit_con_n = pit_condenser->add_option("--n", pit_n, "ambient dimension");
    auto* pit_con_r = pit_condenser->add_option("--r", pit_r, "target rank");
    pit_condenser->callback([&] {
        selected = [&] {
            const Json in = input_json();
            const int n = pit_con_n->count() ? pit_n : field_int(in, "n");
            const int r = pit_con_r->count() ? pit_r : field_int(in, "r");
            const Rat omega = rat_from_json(field(in, "omega"));
            std::vector<Rat> points;
            for (const Json& p : field_array(in, "points")) points.push_back(rat_from_json(p));
            return condenser_to_json(fs_condenser(n, r, omega, points));
        };
    });

    auto* pit_sz = cmd_pit->add_subcommand("sz", "randomized nonzeroness probe");
    pit_sz->fallthrough();
    pit_sz->callback([&] {
        selected = [&] {
            const Json in = input_json();
            const bool nonzero = sz_test(poly_from_json(field(in, "f")),
                                         field_int(in, "trials"), seed,
                                         field_int(in, "lo"), field_int(in, "hi"));
            Json out = Json::object();
            out["nonzero"] = nonzero;
            return out;
        };
    });

    // --- ips ----------------------------------------------------------------
    auto* cmd_ips = app.add_subcommand("ips", "certificate construction and checking");
    cmd_ips->fallthrough();
    cmd_ips->require_subcommand(1);

    auto* ips_build =
        cmd_ips->add_subcommand("build-instance", "assemble the low-rank axiom system");
    ips_build->fallthrough();
    ips_build->callback([&] {
        selected = [] {
            const Json in = input_json();
            return system_to_json(build_rank_instance(
                field_int(in, "n"), field_int(in, "r"),
                condenser_from_json(field(in, "condenser")),
                field_bool_or(in, "include_boolean", false)));
        };
    });

    auto* ips_verify = cmd_ips->add_subcommand("verify", "check a certificate against a system");
    ips_verify->fallthrough();
    ips_verify->callback([&] {
        selected = [] {
            const Json in = input_json();
            AxiomSystem sys = system_from_json(field(in, "system"));
            IPSCertificate cert = certificate_from_json(field(in, "certificate"));
            Json out = Json::object();
            out["verified"] = verify_certificate(cert, sys);
            return out;
        };
    });

    auto* ips_refute =
        cmd_ips->add_subcommand("refute", "emit the inversion system and its refutation");
    ips_refute->fallthrough();
    int ips_n = 0;
    ips_refute->add_option("--n", ips_n, "matrix order")->required();
    ips_refute->callback([&] {
        selected = [&] {
            Json out = Json::object();
            out["system"] = system_to_json(det_inversion_system(ips_n));
            out["certificate"] = certificate_to_json(det_inversion_refutation(ips_n));
            return out;
        };
    });

    auto* ips_extract =
        cmd_ips->add_subcommand("extract", "lift a refutation to a hard-ideal element");
    ips_extract->fallthrough();
    ips_extract->callback([&] {
        selected = [] {
            const Json in = input_json();
            const AxiomSystem sys = system_from_json(field(in, "system"));
            const IPSCertificate cert = certificate_from_json(field(in, "certificate"));
            Json out = Json::object();
            out["element"] = poly_to_json(extract_ideal_element(cert, sys));
            return out;
        };
    });

    // --- abp ----------------------------------------------------------------
    auto* cmd_abp = app.add_subcommand("abp", "evaluate a layered branching program");
    cmd_abp->fallthrough();
    cmd_abp->callback([&] {
        selected = [] {
            const LayeredABP p = abp_from_json(input_json());
            Json out = Json::object();
            out["value"] = poly_to_json(eval_abp(p));
            out["vertices"] = p.vertex_count();
            return out;
        };
    });

    // --- accept -------------------------------------------------------------
    auto* cmd_accept = app.add_subcommand("accept", "run the full acceptance suite");
    cmd_accept->fallthrough();
    cmd_accept->callback([&] {
        selected = [&] {
            const AcceptanceReport rep = run_acceptance(seed);
            Json criteria = Json::array();
            for (const CriterionResult& c : rep.results) {
                Json item = Json::object();
                item["number"] = c.number;
                item["name"] = c.name;
                item["pass"] = c.pass;
                item["detail"] = c.detail;
                criteria.push_back(std::move(item));
            }
            Json out = Json::object();
            out["seed"] = seed;
            out["pass"] = rep.all_pass();
            out["criteria"] = std::move(criteria);
            if (!rep.all_pass()) exit_override = 1;
            return out;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (budget < 0) throw InputError("term budget must be nonnegative");
        std::optional<term_budget::Scope> scope;
        if (budget > 0) scope.emplace(static_cast<std::size_t>(budget));
        emit(selected(), output_path);
        return exit_override;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "conjcert/error.hpp"
#include "conjcert/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace conjcert;

namespace {

struct Io {
    std::string in_path;
    std::string out_path;
    std::uint64_t seed = 1;
    bool deterministic = false;
};

void add_io(CLI::App* cmd, Io& io) {
    cmd->add_option("--in", io.in_path, "input JSON file (default: standard input)");
    cmd->add_option("--out", io.out_path, "output file (default: standard output)");
    cmd->add_option("--seed", io.seed, "seed for randomized internals");
    cmd->add_flag("--deterministic", io.deterministic, "force exhaustive fallbacks where available");
}

Json read_input(const Io& io) {
    std::string text;
    if (io.in_path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(io.in_path);
        if (!f) throw Error(Errc::ParseError, "cannot open input file " + io.in_path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(Errc::ParseError, "input is not valid JSON");
    return j;
}

void write_output(const Io& io, const Json& j) {
    std::string text = j.dump(2) + "\n";
    if (io.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(io.out_path);
        if (!f) throw Error(Errc::ParseError, "cannot open output file " + io.out_path);
        f << text;
    }
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::ParseError, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::pair<FieldPtr, Mat> read_field_matrix(const Json& in) {
    FieldPtr f = field_from_json(require(in, "field"));
    Mat a = mat_from_json(f, require(in, "a"));
    if (!a.is_square()) throw Error(Errc::NotSquare, "input matrix must be square");
    return {f, a};
}

Json cmd_cyclic(const Json& in) {
    auto [f, a] = read_field_matrix(in);
    Json out;
    out["cyclic"] = is_cyclic(a);
    out["algorithm"] = Json{{"minpoly_degree", std::to_string(minpoly(a).degree())},
                            {"size", std::to_string(a.rows())}};
    return out;
}

Json cmd_frobenius(const Json& in) {
    auto [f, a] = read_field_matrix(in);
    auto dec = frobenius_form(a);
    Json factors = Json::array();
    for (const auto& p : dec.invariant_factors) factors.push_back(poly_to_json(p));
    Json out;
    out["invariant_factors"] = std::move(factors);
    out["transform"] = mat_to_json(dec.transform);
    out["block_matrix"] = mat_to_json(dec.block_matrix);
    return out;
}

Json cmd_conjugate_transpose(const Json& in) {
    auto [f, a] = read_field_matrix(in);
    auto cert = symmetric_conjugator(a);
    Json out = transpose_certificate_to_json(cert);
    Json factors = Json::array();
    for (const auto& p : frobenius_form(a).invariant_factors) factors.push_back(poly_to_json(p));
    out["algorithm"] = Json{{"invariant_factors", std::move(factors)}};
    return out;
}

Json cmd_asym_witness(const Json& in) {
    auto [f, a] = read_field_matrix(in);
    auto cert = asymmetric_conjugator(a);
    Json out = transpose_certificate_to_json(cert);
    out["algorithm"] = Json{{"solution_space_dim", std::to_string(intertwiner_space(a, a.transpose()).size())}};
    return out;
}

Json cmd_epsilon(const Json& in) {
    CsaAlgebra alg = csa_algebra_from_json(require(in, "algebra"));
    InvolutionSpec theta = involution_from_json(alg, require(in, "involution"));
    Json out;
    out["epsilon"] = std::to_string(theta.epsilon);
    out["algorithm"] = Json{{"fixed_dim", std::to_string(theta.fixed_dim)},
                            {"reduced_degree", std::to_string(reduced_degree(alg))}};
    return out;
}

Json cmd_csa_conjugate(const Json& in) {
    CsaAlgebra alg = csa_algebra_from_json(require(in, "algebra"));
    InvolutionSpec theta = involution_from_json(alg, require(in, "involution"));
    CsaElement a = csa_element_from_json(alg, require(in, "a"));
    auto witness = theorem_conjugator(theta, a);
    auto cert = make_csa_certificate(theta, a, witness.g);
    Json out = csa_certificate_to_json(cert);
    Json grid = Json::array();
    for (auto v : witness.grid_point) grid.push_back(std::to_string(v));
    out["algorithm"] = Json{{"solution_space_dim", std::to_string(witness.solution_dim)},
                            {"grid_point", std::move(grid)}};
    return out;
}

Place parse_place(const Json& j) {
    std::string s;
    if (j.is_string())
        s = j.get<std::string>();
    else if (j.is_number_integer())
        s = std::to_string(j.get<std::int64_t>());
    else
        throw Error(Errc::ParseError, "place must be \"infinity\" or a prime");
    if (s == "infinity" || s == "inf" || s == "oo") return {true, 0};
    BigInt p = BigInt::from_string(s);
    if (p.is_negative() || !p.fits_int64()) throw Error(Errc::ParseError, "place out of range");
    std::uint64_t pv = static_cast<std::uint64_t>(p.to_int64());
    if (pv < 2) throw Error(Errc::ParseError, "place must be a prime or infinity");
    for (std::uint64_t d = 2; d * d <= pv && d <= 1000000; ++d)
        if (pv % d == 0) throw Error(Errc::ParseError, "place " + s + " is not prime");
    return {false, pv};
}

std::string place_to_string(const Place& p) {
    return p.at_infinity ? "infinity" : std::to_string(p.p);
}

Json cmd_hilbert(const Json& in) {
    Rational alpha = Rational::from_string(require(in, "alpha").is_string()
                                               ? require(in, "alpha").get<std::string>()
                                               : std::to_string(require(in, "alpha").get<std::int64_t>()));
    Rational beta = Rational::from_string(require(in, "beta").is_string()
                                              ? require(in, "beta").get<std::string>()
                                              : std::to_string(require(in, "beta").get<std::int64_t>()));
    Place place = parse_place(require(in, "place"));
    Json out;
    out["symbol"] = std::to_string(hilbert_symbol(alpha, beta, place));
    out["algorithm"] = Json{{"place", place_to_string(place)}};
    return out;
}

Json cmd_is_division(const Json& in) {
    Rational alpha = Rational::from_string(require(in, "alpha").is_string()
                                               ? require(in, "alpha").get<std::string>()
                                               : std::to_string(require(in, "alpha").get<std::int64_t>()));
    Rational beta = Rational::from_string(require(in, "beta").is_string()
                                              ? require(in, "beta").get<std::string>()
                                              : std::to_string(require(in, "beta").get<std::int64_t>()));
    auto rep = is_division_quaternion(alpha, beta);
    Json ram = Json::array();
    for (const auto& p : rep.ramified) ram.push_back(place_to_string(p));
    Json checked = Json::array();
    for (const auto& p : ramifiable_places(alpha, beta)) checked.push_back(place_to_string(p));
    Json out;
    out["division"] = rep.division;
    out["ramified_places"] = std::move(ram);
    out["algorithm"] = Json{{"places_checked", std::move(checked)}};
    return out;
}

Json cmd_verify(const Json& in) {
    std::string type = require(in, "type").is_string() ? require(in, "type").get<std::string>() : "";
    VerifyReport report;
    if (type == "transpose-certificate")
        report = verify_transpose_certificate(transpose_certificate_from_json(in));
    else if (type == "csa-certificate")
        report = verify_csa_certificate(csa_certificate_from_json(in));
    else
        throw Error(Errc::ParseError, "unknown certificate type \"" + type + "\"");
    Json out;
    out["valid"] = report.valid;
    Json reasons = Json::array();
    for (const auto& r : report.reasons) reasons.push_back(r);
    out["reasons"] = std::move(reasons);
    return out;
}

int run(const Io& io, Json (*handler)(const Json&)) {
    Json in;
    try {
        in = read_input(io);
    } catch (const Error& e) {
        write_output(Io{"", io.out_path, 0, false}, Json{{"error", errc_name(e.code())}, {"detail", e.detail()}});
        return 1;
    }
    try {
        write_output(io, handler(in));
        return 0;
    } catch (const Error& e) {
        write_output(Io{"", io.out_path, 0, false}, Json{{"error", errc_name(e.code())}, {"detail", e.detail()}});
        return e.code() == Errc::ParseError ? 1 : 2;
    } catch (const nlohmann::json::exception& e) {
        write_output(Io{"", io.out_path, 0, false}, Json{{"error", "ParseError"}, {"detail", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        write_output(Io{"", io.out_path, 0, false},
                     Json{{"error", "InternalAssertion"}, {"detail", e.what()}});
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact conjugacy certificates for matrices and quaternion matrix algebras"};
    app.require_subcommand(1);

    struct Entry {
        const char* name;
        const char* desc;
        Json (*handler)(const Json&);
    };
    const Entry entries[] = {
        {"conjugate-transpose", "symmetric g with g a g^-1 = transpose(a)", cmd_conjugate_transpose},
        {"asym-witness", "non-symmetric conjugator (fails on cyclic input)", cmd_asym_witness},
        {"cyclic", "decide whether minimal and characteristic polynomials agree", cmd_cyclic},
        {"frobenius", "invariant factors, transform and block matrix", cmd_frobenius},
        {"epsilon", "sign of an involution from its fixed-space dimension", cmd_epsilon},
        {"csa-conjugate", "g with g a g^-1 = theta(a), theta(g) = epsilon g", cmd_csa_conjugate},
        {"hilbert", "hilbert symbol (alpha, beta) at a place", cmd_hilbert},
        {"is-division", "decide whether (alpha, beta / Q) is a division algebra", cmd_is_division},
        {"verify", "recheck an emitted certificate", cmd_verify},
    };

    std::vector<Io> ios(std::size(entries));
    std::vector<CLI::App*> cmds;
    for (std::size_t i = 0; i < std::size(entries); ++i) {
        CLI::App* cmd = app.add_subcommand(entries[i].name, entries[i].desc);
        add_io(cmd, ios[i]);
        cmds.push_back(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << Json{{"error", "ParseError"}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    }

    for (std::size_t i = 0; i < std::size(entries); ++i)
        if (cmds[i]->parsed()) return run(ios[i], entries[i].handler);
    return 1;
}

// Command line surface: exact checks with scriptable output.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "thetaq/heisenberg.hpp"
#include "thetaq/json_io.hpp"
#include "thetaq/qgroup.hpp"
#include "thetaq/skein.hpp"
#include "thetaq/tangle.hpp"
#include "thetaq/theta.hpp"
#include "thetaq/theta_numeric.hpp"
#include "thetaq/zmod.hpp"

using namespace thetaq;
using nlohmann::ordered_json;

namespace {

std::string approx_string(const std::complex<double>& z) {
    std::ostringstream os;
    os << std::setprecision(15) << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

struct RunReport {
    std::string command;
    ordered_json params = ordered_json::object();
    ordered_json extras = ordered_json::object();

    struct Line {
        std::string name;
        bool pass = true;
        bool informational = false;
        std::string value;
        std::string approx;
    };
    std::vector<Line> checks;

    void add(const std::string& name, bool pass, const std::string& value = "",
             const std::string& approx = "") {
        checks.push_back({name, pass, false, value, approx});
    }
    void add_info(const std::string& name, const std::string& value,
                  const std::string& approx = "") {
        checks.push_back({name, true, true, value, approx});
    }
    void add_scalar(const std::string& name, const CycloScalar& s, bool pass) {
        checks.push_back(
            {name, pass, false, s.to_text(), approx_string(s.to_complex())});
    }

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }

    int finish(bool as_json) const {
        const int code = all_pass() ? 0 : 1;
        if (as_json) {
            ordered_json j;
            j["command"] = command;
            j["params"] = params;
            ordered_json lines = ordered_json::array();
            for (const auto& c : checks) {
                ordered_json line;
                line["name"] = c.name;
                line["pass"] = c.pass;
                if (c.informational) line["informational"] = true;
                if (!c.value.empty()) line["value"] = c.value;
                if (!c.approx.empty()) line["approx"] = c.approx;
                lines.push_back(line);
            }
            j["checks"] = lines;
            if (!extras.empty()) j["results"] = extras;
            j["exit"] = code;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "command: " << command << "\n";
            for (const auto& c : checks) {
                std::cout << (c.informational ? "[INFO] "
                                              : (c.pass ? "[PASS] " : "[FAIL] "))
                          << c.name;
                if (!c.value.empty()) std::cout << " = " << c.value;
                if (!c.approx.empty()) std::cout << "  ~ " << c.approx;
                std::cout << "\n";
            }
        }
        return code;
    }
};

std::vector<FramedCurve> parse_twist_word(const std::string& word, size_t g) {
    std::vector<FramedCurve> out;
    std::istringstream in(word);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 4 || tok.substr(0, 2) != "T[" ||
            tok[tok.size() - 2] != ']' ||
            (tok.back() != '+' && tok.back() != '-')) {
            throw Error("bad twist token '" + tok +
                        "' (expected T[a1]+, T[b2]-, T[(p|q)]+ ...)");
        }
        const long framing = (tok.back() == '+') ? 1 : -1;
        const std::string body = tok.substr(2, tok.size() - 4);
        FramedCurve c{std::vector<long>(g, 0), std::vector<long>(g, 0), framing};
        if (body.size() >= 2 && (body[0] == 'a' || body[0] == 'b')) {
            const size_t index = std::stoul(body.substr(1));
            if (index < 1 || index > g) {
                throw Error("curve index out of range in '" + tok + "'");
            }
            (body[0] == 'a' ? c.p : c.q)[index - 1] = 1;
        } else if (!body.empty() && body.front() == '(' && body.back() == ')') {
            const std::string inner = body.substr(1, body.size() - 2);
            const size_t bar = inner.find('|');
            if (bar == std::string::npos) {
                throw Error("expected (p1,...|q1,...) in '" + tok + "'");
            }
            auto parse_list = [&](const std::string& text) {
                std::vector<long> v;
                std::istringstream ls(text);
                std::string part;
                while (std::getline(ls, part, ',')) v.push_back(std::stol(part));
                return v;
            };
            c.p = parse_list(inner.substr(0, bar));
            c.q = parse_list(inner.substr(bar + 1));
            if (c.p.size() != g || c.q.size() != g) {
                throw Error("curve class size differs from genus in '" + tok + "'");
            }
        } else {
            throw Error("bad curve name in '" + tok + "'");
        }
        out.push_back(c);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SliceDiagram load_diagram(const std::string& path) {
    const std::string text = read_file(path);
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return diagram_from_json(text);
    }
    return parse_diagram(text);
}

void matrix_report(RunReport& report, const std::string& key,
                   const CycloMatrix& m, long N, bool as_json) {
    if (as_json) {
        report.extras[key] = ordered_json::parse(operator_to_json(m, N));
    } else {
        for (size_t r = 0; r < m.rows(); ++r) {
            std::ostringstream row;
            row << key << "[" << r << "]: ";
            for (size_t c = 0; c < m.cols(); ++c) {
                if (c) row << " | ";
                row << m.at(r, c).to_text();
            }
            report.add_info(row.str(), "");
        }
    }
}

int cmd_qgroup_check(long N, bool as_json) {
    RunReport report;
    report.command = "qgroup-check";
    report.params["N"] = N;
    for (const auto& section :
         {verify_quasitriangular(N), verify_ribbon(N), verify_hopf_axioms(N),
          verify_representation_scalars(N)}) {
        for (const auto& check : section.checks) {
            report.add(check.name, check.pass);
        }
    }
    const CycloScalar product = gauss_sum(N, +1) * gauss_sum(N, -1);
    report.add_scalar(
        "Gauss sum product equals N", product,
        product == CycloScalar::from_rational(static_cast<int>(N), Rational(N)));
    return report.finish(as_json);
}

int cmd_eval(const std::string& path, bool oracle, bool as_json) {
    RunReport report;
    report.command = "eval";
    report.params["diagram"] = path;
    const SliceDiagram d = load_diagram(path);
    report.params["N"] = d.N;
    const CycloScalar value = evaluate(d);
    report.add_scalar("invariant", value, true);
    if (oracle) {
        const LinkData ld = trace_strands(d);
        const CycloScalar expected = linking_oracle(ld, d.N);
        report.add_scalar("linking oracle", expected, value == expected);
        std::ostringstream os;
        os << ld.components.size();
        report.add_info("components", os.str());
        for (size_t i = 0; i < ld.components.size(); ++i) {
            std::ostringstream line;
            line << "color " << ld.components[i].color << ", framing "
                 << ld.components[i].framing;
            report.add_info("component " + std::to_string(i), line.str());
        }
    }
    if (as_json) {
        report.extras["value"] = ordered_json::parse(scalar_to_json(value));
    }
    return report.finish(as_json);
}

int cmd_fourier(long N, size_t g, const std::string& word, bool as_json) {
    RunReport report;
    report.command = "fourier";
    report.params["N"] = N;
    report.params["g"] = g;
    report.params["word"] = word;
    const auto curves = parse_twist_word(word, g);
    const SymplecticMatrix h = twist_word_matrix(curves, g);
    const FourierPair fp = fourier_matrix(h, Lagrangian::standard(g), N);
    const ThetaOperator omega = rho_via_omega(curves, N, g);
    report.add("coset-sum and Omega constructions agree projectively",
               projectively_equal(fp.rho, omega));
    report.add("exact Egorov identity (coset-sum construction)",
               egorov_residual_for(fp.rho, h, N) == 0, "residual 0");
    report.add("exact Egorov identity (Omega construction)",
               egorov_residual_for(omega, h, N) == 0, "residual 0");
    matrix_report(report, "rho", fp.rho, N, as_json);
    if (as_json) {
        report.extras["rho_inverse"] =
            ordered_json::parse(operator_to_json(fp.rho_inverse, N));
        report.extras["index"] = fp.index;
    }
    return report.finish(as_json);
}

int cmd_egorov(long N, size_t g, const std::string& word, bool as_json) {
    RunReport report;
    report.command = "egorov";
    report.params["N"] = N;
    report.params["g"] = g;
    report.params["word"] = word;
    const auto curves = parse_twist_word(word, g);
    const SymplecticMatrix h = twist_word_matrix(curves, g);
    const long residual = egorov_residual(h, N);
    report.add("exact Egorov identity", residual == 0,
               "residual " + std::to_string(residual));
    return report.finish(as_json);
}

int cmd_gram(long N, size_t g, bool as_json) {
    RunReport report;
    report.command = "gram";
    report.params["N"] = N;
    report.params["g"] = g;
    const size_t dim = zng_size(N, g);
    const ThetaOperator gram = heegaard_gram(N, g);
    report.add("Gram rank equals N^g", gram.rank() == dim,
               std::to_string(gram.rank()) + " of " + std::to_string(dim));
    bool inverse_ok = true;
    try {
        const ThetaOperator inv = pairing_gram_inverse(N, g);
        inverse_ok =
            gram * inv == CycloMatrix::identity(dim, static_cast<int>(N));
    } catch (const Error&) {
        inverse_ok = false;
    }
    report.add("closed-form inverse (1/N^g) t^{2 mu.nu}", inverse_ok);
    const ColoredGram cg = colored_gram(N, g, zng_all(2 * N, g));
    report.add("colored Gram over all Z_{2N}^g colorings has rank N^g",
               cg.rank == dim,
               std::to_string(cg.rank) + " of " + std::to_string(cg.gram.rows()));
    return report.finish(as_json);
}

int cmd_theta_numeric(long N, size_t g, const std::string& pi_json, long M,
                      long Q, bool strict, long seed, bool as_json) {
    RunReport report;
    report.command = "theta-numeric";
    report.params["N"] = N;
    report.params["g"] = g;
    report.params["trunc"] = M;
    report.params["quad"] = Q;
    report.params["strict"] = strict;

    std::vector<Complex> entries;
    if (pi_json.empty()) {
        entries.assign(g * g, Complex(0.0, 0.0));
        for (size_t i = 0; i < g; ++i) entries[i * g + i] = Complex(0.0, 1.0);
    } else {
        const auto j = ordered_json::parse(pi_json);
        for (const auto& row : j) {
            for (const auto& cell : row) {
                entries.emplace_back(cell.at(0).get<double>(),
                                     cell.at(1).get<double>());
            }
        }
    }
    const PeriodMatrix pi(g, entries);

    std::mt19937_64 rng(static_cast<uint64_t>(seed));
    auto urand = [&rng]() {
        return static_cast<double>(rng() % 100000) / 100000.0;
    };
    double worst = 0.0;
    for (long mu_index = 0; mu_index < static_cast<long>(zng_size(N, g));
         ++mu_index) {
        const TruncatedThetaSeries series{
            zng_from_index(static_cast<size_t>(mu_index), N, g), N, pi, M};
        // Points keep |Im z| <= 0.05 so the conditioning of the
        // quasi-periodicity factor e^{pi N + 2 pi N Im z} stays well
        // inside the reported tolerances.
        for (int pt = 0; pt < 20; ++pt) {
            std::vector<Complex> z(g);
            for (size_t i = 0; i < g; ++i) {
                z[i] = Complex(urand(), 0.1 * urand() - 0.05);
            }
            for (size_t j = 1; j <= 2 * g; ++j) {
                worst = std::max(worst, periodicity_residual(series, z, j));
            }
        }
    }
    const bool residual_ok = worst < 1e-8;
    {
        std::ostringstream os;
        os << std::setprecision(6) << std::scientific << worst;
        if (strict) {
            report.add("max periodicity residual < 1e-8", residual_ok, os.str());
        } else {
            report.add_info("max periodicity residual", os.str());
        }
    }

    const auto gram = gram_quadrature(N, g, pi, M, Q);
    const double gram_err = gram_identity_error(gram, zng_size(N, g));
    {
        std::ostringstream os;
        os << std::setprecision(6) << std::scientific << gram_err;
        if (strict) {
            report.add("|Gram - I|_max < 1e-6", gram_err < 1e-6, os.str());
        } else {
            report.add_info("|Gram - I|_max", os.str());
        }
    }
    return report.finish(as_json);
}

int cmd_corpus(const std::string& mode, const std::string& dir, long random,
               long seed, bool as_json) {
    RunReport report;
    report.command = "corpus " + mode;
    report.params["dir"] = dir;
    const std::filesystem::path golden_path =
        std::filesystem::path(dir) / "golden.json";

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".slc") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    if (mode == "regenerate") {
        ordered_json golden;
        golden["diagrams"] = ordered_json::object();
        for (const auto& path : files) {
            const SliceDiagram d = parse_diagram(read_file(path.string()));
            const CycloScalar value = evaluate(d);
            const bool agrees = value == linking_oracle(trace_strands(d), d.N);
            report.add("oracle agreement: " + path.filename().string(), agrees,
                       value.to_text());
            golden["diagrams"][path.filename().string()] =
                ordered_json::parse(scalar_to_json(value));
        }
        std::ofstream out(golden_path);
        out << golden.dump(2) << "\n";
        report.add_info("golden file written", golden_path.string());
    } else if (mode == "verify") {
        ordered_json golden;
        if (std::filesystem::exists(golden_path)) {
            golden = ordered_json::parse(read_file(golden_path.string()));
        }
        for (const auto& path : files) {
            const SliceDiagram d = parse_diagram(read_file(path.string()));
            const CycloScalar value = evaluate(d);
            bool ok = value == linking_oracle(trace_strands(d), d.N);
            const std::string name = path.filename().string();
            if (golden.contains("diagrams") &&
                golden["diagrams"].contains(name)) {
                ok = ok && value == scalar_from_json(
                                        golden["diagrams"][name].dump());
            }
            report.add(name, ok, value.to_text(),
                       approx_string(value.to_complex()));
        }
        for (long N : {2L, 4L}) {
            std::mt19937_64 rng(static_cast<uint64_t>(seed) + N);
            bool ok = true;
            for (long i = 0; i < random; ++i) {
                const SliceDiagram d = random_diagram(N, rng);
                ok = ok && evaluate(d) == linking_oracle(trace_strands(d), N);
            }
            if (random > 0) {
                report.add("random diagrams at N=" + std::to_string(N), ok,
                           std::to_string(random) + " checked");
            }
        }
    } else {
        throw Error("corpus mode must be 'regenerate' or 'verify'");
    }
    return report.finish(as_json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact theta-function and abelian quantum-group toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool as_json = false;
    long seed = 1;
    app.add_flag("--json", as_json, "machine-readable JSON report");
    app.add_option("--seed", seed, "seed for randomized checks");

    long qg_n = 2;
    auto* qgroup_cmd =
        app.add_subcommand("qgroup-check", "verify the Hopf-algebra axioms");
    qgroup_cmd->add_option("--N", qg_n, "even order parameter")->required();

    std::string eval_path;
    bool eval_oracle = false;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a sliced diagram");
    eval_cmd->add_option("diagram", eval_path, ".slc or JSON diagram file")
        ->required();
    eval_cmd->add_flag("--oracle", eval_oracle,
                       "cross-check against the linking-number oracle");

    long f_n = 2;
    size_t f_g = 1;
    std::string f_word;
    auto* fourier_cmd = app.add_subcommand(
        "fourier", "discrete Fourier transform of a twist word, both ways");
    fourier_cmd->add_option("--N", f_n)->required();
    fourier_cmd->add_option("--g", f_g);
    fourier_cmd->add_option("--word", f_word, "e.g. \"T[b1]+ T[a1]-\"");

    long e_n = 2;
    size_t e_g = 1;
    std::string e_word;
    auto* egorov_cmd =
        app.add_subcommand("egorov", "Egorov residual of a twist word");
    egorov_cmd->add_option("--N", e_n)->required();
    egorov_cmd->add_option("--g", e_g);
    egorov_cmd->add_option("--word", e_word);

    long g_n = 2;
    size_t g_g = 1;
    auto* gram_cmd =
        app.add_subcommand("gram", "pairing nondegeneracy and inverse checks");
    gram_cmd->add_option("--N", g_n)->required();
    gram_cmd->add_option("--g", g_g);

    long t_n = 2;
    size_t t_g = 1;
    long t_m = 10, t_q = 64;
    bool t_strict = false;
    std::string t_pi;
    auto* theta_cmd = app.add_subcommand(
        "theta-numeric", "truncated theta series residuals and Gram");
    theta_cmd->add_option("--N", t_n)->required();
    theta_cmd->add_option("--g", t_g);
    theta_cmd->add_option("--Pi", t_pi,
                          "period matrix as JSON [[[re,im],...],...]");
    theta_cmd->add_option("--trunc", t_m, "truncation radius M");
    theta_cmd->add_option("--quad", t_q, "quadrature points per axis");
    theta_cmd->add_flag("--strict", t_strict, "fail on tolerance violations");

    std::string c_mode, c_dir = "tests/corpus";
    long c_random = 0;
    auto* corpus_cmd =
        app.add_subcommand("corpus", "regenerate or verify the golden corpus");
    corpus_cmd->add_option("mode", c_mode, "regenerate | verify")->required();
    corpus_cmd->add_option("--dir", c_dir, "corpus directory");
    corpus_cmd->add_option("--random", c_random,
                           "additional seeded random diagrams per N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*qgroup_cmd) {
            if (qg_n <= 0 || qg_n % 2 != 0) {
                throw BadN("N must be a positive even integer");
            }
            return cmd_qgroup_check(qg_n, as_json);
        }
        if (*eval_cmd) return cmd_eval(eval_path, eval_oracle, as_json);
        if (*fourier_cmd) return cmd_fourier(f_n, f_g, f_word, as_json);
        if (*egorov_cmd) return cmd_egorov(e_n, e_g, e_word, as_json);
        if (*gram_cmd) return cmd_gram(g_n, g_g, as_json);
        if (*theta_cmd) {
            return cmd_theta_numeric(t_n, t_g, t_pi, t_m, t_q, t_strict, seed,
                                     as_json);
        }
        if (*corpus_cmd) {
            return cmd_corpus(c_mode, c_dir, c_random, seed, as_json);
        }
    } catch (const BadN& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const JsonError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OpenStrands& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ColorMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadPosition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

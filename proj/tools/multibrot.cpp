// multibrot: theorem drivers, parabolic searches, capacity queries and an
// escape-time renderer for z^d + c.

#include "multibrot/capacity/diameter.hpp"
#include "multibrot/capacity/fekete.hpp"
#include "multibrot/certificates/theorems.hpp"
#include "multibrot/cli/render.hpp"
#include "multibrot/parabolic/parabolic.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace multibrot;
using exact::Json;
using exact::Rational;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

unsigned default_bits() {
    if (const char* v = std::getenv("MULTIBROT_BITS")) {
        try {
            unsigned long b = std::stoul(v);
            if (b >= 16 && b <= capacity::max_precision_bits) return static_cast<unsigned>(b);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring MULTIBROT_BITS=" << v << "\n";
    }
    return 128;
}

// "3", "-1/3" or "0.25"
Rational parse_number(const std::string& text) {
    auto dot = text.find('.');
    try {
        if (dot == std::string::npos) return exact::parse_rational(text);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument(text);
        return exact::parse_rational(digits) / Rational(exact::pow(exact::BigInt(10), frac));
    } catch (const std::exception&) {
        throw UsageError("not a number: " + text);
    }
}

std::pair<unsigned, unsigned> parse_resolution(const std::string& text) {
    unsigned w = 0, h = 0;
    char x = 0;
    std::istringstream in(text);
    if (!(in >> w >> x >> h) || (x != 'x' && x != 'X') || !in.eof()) throw UsageError("resolution must look like 800x800");
    return {w, h};
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for the multibrot family z^d + c"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    std::uint64_t seed = 1;
    app.add_option("--out", out, "write JSON (or the image, for render) to this file");
    app.add_option("--seed", seed, "seed for randomized restarts");

    // verify
    auto* verify = app.add_subcommand("verify", "run a classification driver and print its certificate");
    std::string which;
    unsigned d_min = 0, d_max = 0, n_max = 3;
    verify->add_option("theorem", which, "thm11, thm12 or thm13")->required()->check(CLI::IsMember({"thm11", "thm12", "thm13"}));
    verify->add_option("--d-min", d_min);
    verify->add_option("--d-max", d_max);
    verify->add_option("--n-max", n_max);

    // parabolic
    auto* parabolic_cmd = app.add_subcommand("parabolic", "parabolic parameters");
    parabolic_cmd->require_subcommand(1);
    auto* solve = parabolic_cmd->add_subcommand("solve", "parameters with a cycle of exact period n and multiplier lambda");
    unsigned pd = 2, pn = 1;
    int lambda = 1;
    solve->add_option("--d", pd)->required();
    solve->add_option("--n", pn)->required();
    solve->add_option("--lambda", lambda)->required()->check(CLI::IsMember({-1, 1}));

    // capacity
    auto* cap = app.add_subcommand("capacity", "n-th diameters of real intervals");
    cap->require_subcommand(1);
    auto* dn = cap->add_subcommand("dn", "certified n-th diameter of [a, b]");
    std::string a_text = "-1", b_text = "1";
    unsigned cn = 2, bits = default_bits();
    dn->add_option("--a", a_text)->required();
    dn->add_option("--b", b_text)->required();
    dn->add_option("--n", cn)->required();
    dn->add_option("--bits", bits);
    auto* fek = cap->add_subcommand("fekete", "numerical Fekete points of [a, b]");
    unsigned restarts = 4;
    double fa = -1, fb = 1;
    fek->add_option("--n", cn)->required();
    fek->add_option("--a", fa);
    fek->add_option("--b", fb);
    fek->add_option("--restarts", restarts);
    auto* ineq = cap->add_subcommand("ineq41", "certified sigma(d) tau(n) against 1");
    unsigned id = 4, in = 3;
    ineq->add_option("--d", id)->required();
    ineq->add_option("--n", in)->required();
    ineq->add_option("--bits", bits);

    // render
    auto* render = app.add_subcommand("render", "escape-time picture as binary PPM");
    unsigned rd = 2, max_iter = 2000, palette = 0;
    std::string center_text, res_text = "800x800";
    double width = 0;
    render->add_option("--d", rd)->required();
    render->add_option("--center", center_text, "re,im");
    render->add_option("--width", width);
    render->add_option("--res", res_text);
    render->add_option("--max-iter", max_iter);
    render->add_option("--palette", palette);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*verify) {
            certificates::CertificateReport rep = [&] {
                if (which == "thm11") return certificates::theorem_11_driver(d_min ? d_min : 2, d_max ? d_max : 9);
                if (which == "thm12") return certificates::theorem_12_driver(n_max);
                return certificates::theorem_13_driver(d_min ? d_min : 3, d_max ? d_max : 10, n_max);
            }();
            emit(rep.to_json(), out);
            return rep.pass() ? 0 : exit_fail;
        }
        if (*solve) {
            auto cands = parabolic::solve_parabolic(pd, pn, lambda);
            Json list = Json::array();
            for (const auto& c : cands) list.push_back(c.to_json());
            emit(Json{{"d", pd}, {"n", pn}, {"lambda", lambda}, {"candidates", list}}, out);
            return 0;
        }
        if (*dn) {
            Rational a = parse_number(a_text), b = parse_number(b_text);
            if (!(a < b)) throw UsageError("need a < b");
            if (cn < 2) throw UsageError("need n >= 2");
            auto v = capacity::dn_interval(a, b, cn, bits);
            emit(Json{{"a", exact::to_string(a)},
                      {"b", exact::to_string(b)},
                      {"n", cn},
                      {"bits", bits},
                      {"enclosure", {exact::to_string(v.lo_rational()), exact::to_string(v.hi_rational())}},
                      {"approx", v.str(20)}},
                 out);
            return 0;
        }
        if (*fek) {
            auto r = capacity::fekete_oracle(fa, fb, cn, restarts, seed);
            emit(Json{{"a", fa},
                      {"b", fb},
                      {"n", cn},
                      {"seed", seed},
                      {"points", r.points},
                      {"log_product", r.log_product},
                      {"value", r.value},
                      {"restarts", r.restarts},
                      {"endpoints_attained", r.endpoints_attained}},
                 out);
            return 0;
        }
        if (*ineq) {
            auto r = capacity::inequality_41(id, in, bits);
            emit(r.to_json(), out);
            return 0;
        }
        if (*render) {
            cli::RenderSpec s = cli::default_view(rd);
            if (!center_text.empty()) {
                auto comma = center_text.find(',');
                try {
                    s.center_re = std::stod(center_text.substr(0, comma));
                    s.center_im = comma == std::string::npos ? 0.0 : std::stod(center_text.substr(comma + 1));
                } catch (const std::exception&) {
                    throw UsageError("center must look like -0.75,0");
                }
            }
            if (width != 0) s.width = width;
            std::tie(s.columns, s.rows) = parse_resolution(res_text);
            s.max_iter = max_iter;
            s.palette = palette;
            try {
                s.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::string path = out.empty() ? "multibrot_d" + std::to_string(rd) + ".ppm" : out;
            cli::write_file(path, cli::render_ppm(s));
            std::cerr << "wrote " << path << "\n";
            return 0;
        }
    } catch (const parabolic::InstanceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}

// magh: command-line front end.
//
//   magh gen cycle 6 | magh compute --n-max 3 --l spectrum --format table
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or input
// error.

#include "magh/magh.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace magh;

constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Common {
    std::string in;
    std::string out;
    unsigned threads = 0;
    std::uint64_t cap = 0;

    unsigned thread_count() const { return threads ? threads : default_thread_count(); }
    std::uint64_t chain_cap() const { return cap ? cap : default_enumeration_cap(); }
};

std::string read_all(std::string const& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream f(path);
    if (!f)
        throw FormatError("--in: cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

FiniteMetricSpace load_space(Common const& c)
{
    std::istringstream in(read_all(c.in));
    return read_space(in);
}

void emit(Common const& c, std::string const& text)
{
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw FormatError("--out: cannot open " + c.out);
    f << text;
}

void add_io(CLI::App* app, Common& c, bool with_input = true)
{
    if (with_input)
        app->add_option("--in", c.in, "space file (JSON or CSV); stdin when omitted");
    app->add_option("--out", c.out, "output file; stdout when omitted");
}

void add_workers(CLI::App* app, Common& c)
{
    app->add_option("--threads", c.threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
    app->add_option("--cap", c.cap, "enumeration cap per degree (default: MAGH_CAP or 5000000)")
        ->check(CLI::PositiveNumber);
}

PointIndex resolve_point(FiniteMetricSpace const& space, std::string const& token)
{
    for (std::size_t i = 0; i < space.size(); ++i)
        if (space.label(i) == token)
            return static_cast<PointIndex>(i);
    try {
        std::size_t used = 0;
        unsigned long const v = std::stoul(token, &used);
        if (used == token.size() && v < space.size())
            return static_cast<PointIndex>(v);
    } catch (std::exception const&) {
    }
    throw FormatError("--pair: no point labelled or indexed '" + token + "'");
}

std::vector<Rational> parse_lengths(std::string const& list)
{
    std::vector<Rational> out;
    std::stringstream s(list);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (std::invalid_argument const& e) {
            throw FormatError("--l: " + std::string(e.what()));
        }
        if (out.back().sign() < 0)
            throw FormatError("--l: lengths must be nonnegative, got " + item);
    }
    if (out.empty())
        throw FormatError("--l: expected 'spectrum' or a comma-separated list of rationals");
    return out;
}

std::string lines(std::vector<VerificationReport> const& reports, bool& all_passed)
{
    std::ostringstream s;
    for (auto const& r : reports) {
        s << r.to_json().dump() << '\n';
        all_passed = all_passed && r.passed;
    }
    return s.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Integer magnitude homology of finite metric spaces"};
    app.require_subcommand(1);

    // gen
    Common gen_io;
    std::string gen_kind;
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 1, gen_max_w = 9;
    std::string gen_format = "json";
    auto* gen = app.add_subcommand("gen", "write a generated space");
    gen->add_option("kind", gen_kind, "cycle | path | complete | random")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete", "random"}));
    gen->add_option("n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "seed for random");
    gen->add_option("--max-w", gen_max_w, "largest edge weight for random")->check(CLI::PositiveNumber);
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "csv"}));
    add_io(gen, gen_io, false);

    // compute
    Common comp_io;
    int comp_n_max = 3;
    std::string comp_l = "spectrum";
    std::string comp_format = "json";
    auto* compute = app.add_subcommand("compute", "homology table MH_n^l");
    compute->add_option("--n-max", comp_n_max, "highest degree")->check(CLI::NonNegativeNumber);
    compute->add_option("--l", comp_l, "'spectrum' or a comma-separated list such as 1,3/2,2");
    compute->add_option("--format", comp_format)->check(CLI::IsMember({"json", "csv", "table"}));
    add_io(compute, comp_io);
    add_workers(compute, comp_io);

    // mx
    Common mx_io;
    auto* mx = app.add_subcommand("mx", "least 4-cut length m_X with a witness");
    add_io(mx, mx_io);
    add_workers(mx, mx_io);

    // certify
    Common cert_io;
    std::vector<std::string> cert_pair;
    auto* certify = app.add_subcommand("certify", "MH_2 lower bound from the interval poset of a pair");
    certify->add_option("--pair", cert_pair, "two points, by label or index")->required()->expected(2);
    add_io(certify, cert_io);

    // verify
    Common ver_io;
    bool ver_all = false;
    std::uint64_t ver_seed = 1;
    int ver_n_max = 3;
    auto* verify = app.add_subcommand("verify", "run verification checks, one JSON line per check");
    verify->add_flag("--all", ver_all, "run the full suite on generated spaces instead of reading a space");
    verify->add_option("--seed", ver_seed, "seed for the random spaces of the suite");
    verify->add_option("--n-max", ver_n_max, "highest degree for single-space checks")->check(CLI::NonNegativeNumber);
    add_io(verify, ver_io);
    add_workers(verify, ver_io);

    // spectrum
    Common spec_io;
    int spec_n_max = 3;
    auto* spectrum = app.add_subcommand("spectrum", "chain counts by degree and length (CSV)");
    spectrum->add_option("--n-max", spec_n_max, "highest degree")->check(CLI::NonNegativeNumber);
    add_io(spectrum, spec_io);
    add_workers(spectrum, spec_io);

    // quantize
    Common quant_io;
    std::string quant_q;
    auto* quant = app.add_subcommand("quantize", "snap a decimal matrix to multiples of 1/Q and close it");
    quant->add_option("--q", quant_q, "positive integer denominator")->required();
    add_io(quant, quant_io);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*gen) {
            FiniteMetricSpace const space = gen_kind == "cycle"      ? cycle_space(gen_n)
                                            : gen_kind == "path"     ? path_space(gen_n)
                                            : gen_kind == "complete" ? complete_space(gen_n)
                                                                     : random_metric(gen_n, gen_seed, gen_max_w);
            emit(gen_io, gen_format == "csv" ? space_to_csv(space) : space_to_json(space).dump(2) + "\n");
            return 0;
        }
        if (*compute) {
            FiniteMetricSpace const space = load_space(comp_io);
            std::vector<Rational> const lengths = comp_l == "spectrum"
                                                      ? spectrum_lengths(space, comp_n_max, comp_io.chain_cap())
                                                      : parse_lengths(comp_l);
            HomologyTable const table =
                homology_table(space, lengths, comp_n_max, comp_io.thread_count(), comp_io.chain_cap());
            if (comp_format == "csv")
                emit(comp_io, table_to_csv(table));
            else if (comp_format == "table")
                emit(comp_io, table_to_text(table));
            else
                emit(comp_io, table_to_json(table).dump(2) + "\n");
            return 0;
        }
        if (*mx) {
            FiniteMetricSpace const space = load_space(mx_io);
            emit(mx_io, mx_to_json(m_x(space, mx_io.thread_count())).dump() + "\n");
            return 0;
        }
        if (*certify) {
            FiniteMetricSpace const space = load_space(cert_io);
            PointIndex const a = resolve_point(space, cert_pair[0]);
            PointIndex const b = resolve_point(space, cert_pair[1]);
            emit(cert_io, certificate_to_json(mh2_certificate(space, a, b)).dump() + "\n");
            return 0;
        }
        if (*verify) {
            bool passed = true;
            std::string out;
            if (ver_all) {
                out = lines(run_suite(ver_seed, ver_io.thread_count(), ver_io.chain_cap()), passed);
            } else {
                FiniteMetricSpace const space = load_space(ver_io);
                std::uint64_t const cap = ver_io.chain_cap();
                std::string const name = "input";
                std::vector<VerificationReport> reports{
                    check_d_squared(space, name, ver_n_max, cap),
                    check_trivial_gradings(space, name, ver_n_max, cap),
                    check_simp_iso(space, name, ver_n_max, cap),
                    check_frame_injectivity(space, name, ver_n_max, cap),
                    check_certificates(space, name, cap),
                    check_tensor_route(space, name, 2, ver_n_max, TensorScope::AllFrames, cap),
                    check_tensor_route(space, name, 2, ver_n_max, TensorScope::StableFrames, cap),
                };
                out = lines(reports, passed);
            }
            emit(ver_io, out);
            return passed ? 0 : kCheckFailed;
        }
        if (*spectrum) {
            FiniteMetricSpace const space = load_space(spec_io);
            emit(spec_io, spectrum_to_csv(space, spec_n_max, spec_io.chain_cap()));
            return 0;
        }
        if (*quant) {
            Integer q;
            if (q.set_str(quant_q, 10) != 0 || q <= 0)
                throw FormatError("--q: expected a positive integer, got " + quant_q);
            json doc;
            try {
                doc = json::parse(read_all(quant_io.in));
            } catch (json::parse_error const& e) {
                throw FormatError(std::string("input: invalid JSON: ") + e.what());
            }
            auto [decimals, labels] = decimal_matrix_from_json(doc);
            FiniteMetricSpace const space = validate_metric(quantize(decimals, q), std::move(labels));
            emit(quant_io, space_to_json(space).dump(2) + "\n");
            return 0;
        }
    } catch (EnumerationCapExceeded const& e) {
        std::cerr << "magh: " << e.what() << " (raise --cap or MAGH_CAP)\n";
        return kInputError;
    } catch (std::exception const& e) {
        std::cerr << "magh: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

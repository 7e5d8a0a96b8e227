#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toric/errors.hpp"
#include "toric/report.hpp"

namespace fs = std::filesystem;
using toric::Json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDegenerate = 4;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw toric::validation_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json run_case(const fs::path& input_path, toric::ReportOptions options) {
    const std::string bytes = read_file(input_path);
    Json parsed;
    try {
        parsed = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw toric::validation_error(input_path.string() + ": " + e.what());
    }
    options.input_hash = toric::fnv1a64_hex(bytes);
    return toric::build_report(toric::parse_problem(parsed), options);
}

int run_corpus(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        std::cerr << "corpus: not a directory: " << dir << "\n";
        return kExitValidation;
    }
    std::vector<fs::path> cases;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_directory() && fs::exists(entry.path() / "input.json"))
            cases.push_back(entry.path());
    std::sort(cases.begin(), cases.end());
    if (cases.empty()) {
        std::cout << "corpus: warning: no cases found under " << dir.string() << "\n";
        std::cout << "corpus: 0 cases, all passed\n";
        return 0;
    }

    size_t failures = 0;
    for (const fs::path& c : cases) {
        const std::string name = c.filename().string();
        try {
            toric::ReportOptions options;
            options.section = "analyze";
            options.scale = 1;
            const Json got = run_case(c / "input.json", options);
            const std::string got_bytes = got.dump(2) + "\n";

            const fs::path expected_path = c / "expected.json";
            if (!fs::exists(expected_path)) {
                std::cout << "FAIL " << name << ": missing expected.json\n";
                ++failures;
                continue;
            }
            const std::string expected_bytes = read_file(expected_path);
            if (got_bytes != expected_bytes) {
                ++failures;
                std::cout << "FAIL " << name << ": report differs from expected.json\n";
                const size_t limit = std::min(got_bytes.size(), expected_bytes.size());
                size_t at = 0;
                while (at < limit && got_bytes[at] == expected_bytes[at]) ++at;
                const auto context = [&](const std::string& s) {
                    const size_t from = at > 40 ? at - 40 : 0;
                    return s.substr(from, 80);
                };
                std::cout << "  first difference at byte " << at << "\n";
                std::cout << "  expected ..." << context(expected_bytes) << "...\n";
                std::cout << "  got      ..." << context(got_bytes) << "...\n";
                continue;
            }

            // candidate-set stability: the Fine interior must not move at scale 2
            toric::ReportOptions stable = options;
            stable.section = "fine-interior";
            stable.scale = 2;
            const Json fine2 = run_case(c / "input.json", stable);
            toric::ReportOptions base = stable;
            base.scale = 1;
            const Json fine1 = run_case(c / "input.json", base);
            if (fine1["fine_interior"]["dim"] != fine2["fine_interior"]["dim"] ||
                fine1["fine_interior"]["vertices"] != fine2["fine_interior"]["vertices"]) {
                ++failures;
                std::cout << "FAIL " << name << ": fine interior changed at candidate scale 2\n";
                continue;
            }
            std::cout << "PASS " << name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL " << name << ": " << e.what() << "\n";
        }
    }
    std::cout << "corpus: " << cases.size() << " cases, " << (cases.size() - failures)
              << " passed, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric-moduli: exact polyhedral invariants and Kodaira-Spencer kernels"};
    app.require_subcommand(1);

    const std::vector<std::string> sections = {
        "analyze",           "fine-interior", "canonical-closure", "support", "roots",
        "kernel",            "moduli",        "subfamily",         "lattice-points",
        "facets"};

    std::string input_file;
    std::string map_choice;
    std::string format = "json";
    unsigned scale = 1;
    long long seed = -1;
    long range = -1;

    std::vector<CLI::App*> subs;
    for (const std::string& name : sections) {
        CLI::App* sub = app.add_subcommand(name, "emit the " + name + " report section");
        sub->add_option("input", input_file, "problem JSON file")->required();
        sub->add_option("--map", map_choice, "kernel map variant")
            ->check(CLI::IsMember({"ambient", "family"}));
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--candidate-scale", scale, "candidate normal scale (default 1)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "seed for generic coefficients");
        sub->add_option("--range", range, "coefficient range for generic coefficients");
        subs.push_back(sub);
    }

    fs::path corpus_dir;
    CLI::App* corpus = app.add_subcommand("corpus", "run a directory of golden cases");
    corpus->add_option("dir", corpus_dir, "corpus directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus->parsed()) return run_corpus(corpus_dir);
        for (size_t i = 0; i < subs.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            toric::ReportOptions options;
            options.section = sections[i];
            options.scale = scale;
            if (map_choice == "ambient") options.map = toric::MapVariant::ambient;
            if (map_choice == "family") options.map = toric::MapVariant::family;
            if (seed >= 0) options.seed_override = static_cast<unsigned long>(seed);
            if (range >= 1) options.range_override = range;
            const Json report = run_case(input_file, options);
            if (format == "table")
                std::cout << toric::to_table(report);
            else
                std::cout << report.dump(2) << "\n";
            return 0;
        }
    } catch (const toric::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const toric::degenerate_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const toric::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

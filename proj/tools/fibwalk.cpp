#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "fibwalk/battery.hpp"
#include "fibwalk/fib.hpp"
#include "fibwalk/modular.hpp"
#include "fibwalk/report.hpp"
#include "fibwalk/walks.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void print_walks(const std::vector<fibwalk::Walk>& walks) {
    for (const auto& w : walks) {
        for (std::size_t i = 0; i < w.steps.size(); ++i) {
            if (i > 0) std::cout << " -> ";
            std::cout << w.steps[i].value;
            if (i > 0) std::cout << " (+" << w.steps[i].appended_block << ")";
        }
        std::cout << (w.truncated ? "  [truncated]" : "  [maximal]") << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digit-append walks on the Fibonacci sequence: queries and a verification battery"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fibwalk::kVersion);
    app.set_config("--config", "", "Config file; subcommand options go in a [verify]-style section");
    app.fallthrough();

    // fib <n>
    std::uint64_t fib_n = 0;
    auto* cmd_fib = app.add_subcommand("fib", "Print the n-th Fibonacci number");
    cmd_fib->add_option("n", fib_n, "Index (F_0 = 0, F_1 = 1)")->required();

    // is-fib <x>
    std::string isfib_x;
    auto* cmd_isfib = app.add_subcommand("is-fib", "Test Fibonacci membership");
    cmd_isfib->add_option("x", isfib_x, "Decimal value of arbitrary length")->required();

    // pisano <m>
    std::uint64_t pisano_m = 0;
    bool pisano_residues = false;
    auto* cmd_pisano = app.add_subcommand("pisano", "Pisano period of the sequence mod m");
    cmd_pisano->add_option("m", pisano_m, "Modulus")->required()->check(CLI::PositiveNumber);
    cmd_pisano->add_flag("--residues", pisano_residues, "Also print one full period of residues");

    // walks
    std::string walks_start, walks_mode = "exact";
    unsigned walks_n = 1, walks_max_len = 16;
    auto* cmd_walks = app.add_subcommand("walks", "Enumerate digit-append walks from a start");
    cmd_walks->add_option("--start", walks_start, "Starting Fibonacci number (decimal)")->required();
    cmd_walks->add_option("--mode", walks_mode, "Append rule: exact | atmost")
        ->check(CLI::IsMember({"exact", "atmost"}));
    cmd_walks->add_option("--n", walks_n, "Digit budget per append")->check(CLI::PositiveNumber);
    cmd_walks->add_option("--max-len", walks_max_len, "Depth cap")->check(CLI::PositiveNumber);

    // bound --theorem2 --n N --n0 N0
    bool bound_theorem2 = false;
    unsigned bound_n = 1, bound_n0 = 1;
    auto* cmd_bound = app.add_subcommand("bound", "Evaluate walk-length bounds");
    cmd_bound->add_flag("--theorem2", bound_theorem2, "Longest-walk bound for at-most-N appends");
    cmd_bound->add_option("--n", bound_n, "Digit budget N")->required()->check(CLI::PositiveNumber);
    cmd_bound->add_option("--n0", bound_n0, "Digit count of the start")->check(CLI::PositiveNumber);

    // verify <check|all>
    std::string verify_target = "all", verify_format = "text", verify_out;
    fibwalk::BatteryConfig cfg;
    auto* cmd_verify = app.add_subcommand("verify", "Run verification checks");
    cmd_verify->add_option("check", verify_target, "Check name or 'all'");
    cmd_verify->add_option("--format", verify_format, "Report format: text | json | csv");
    cmd_verify->add_option("--out", verify_out, "Write the report to a file");
    cmd_verify->add_option("--lemma3-max", cfg.lemma3_max, "Grid limit for the product bounds");
    cmd_verify->add_option("--lemma4-max", cfg.lemma4_max, "Grid limit for the index-shift identity");
    cmd_verify->add_option("--binet-max", cfg.binet_max, "Largest index for the closed-form check");
    cmd_verify->add_option("--theorem1-cutoff", cfg.theorem1_index_cutoff,
                           "Largest start index for the one-digit enumeration");
    cmd_verify->add_option("--theorem2-max-n", cfg.theorem2_max_n, "Largest at-most-N budget");
    cmd_verify->add_option("--threads", cfg.threads,
                           "Worker threads (FIBWALK_THREADS overrides; 0 = hardware)");
    cmd_verify->add_flag("--inject-fault", cfg.inject_fault,
                         "Self-test: corrupt a table copy and require the battery to notice");
    bool list_checks = false;
    cmd_verify->add_flag("--list", list_checks, "List check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (cmd_fib->parsed()) {
            std::cout << fibwalk::fib(fib_n) << "\n";
            return kExitPass;
        }
        if (cmd_isfib->parsed()) {
            auto idx = fibwalk::is_fibonacci(fibwalk::parse_nat(isfib_x));
            if (idx)
                std::cout << "fibonacci, index " << *idx << "\n";
            else
                std::cout << "not fibonacci\n";
            return kExitPass;
        }
        if (cmd_pisano->parsed()) {
            auto p = fibwalk::pisano_period(pisano_m);
            std::cout << "pisano(" << p.modulus << ") = " << p.period << "\n";
            if (pisano_residues) {
                for (std::size_t i = 0; i < p.residues.size(); ++i)
                    std::cout << p.residues[i] << (i + 1 < p.residues.size() ? ' ' : '\n');
            }
            return kExitPass;
        }
        if (cmd_walks->parsed()) {
            auto rule = walks_mode == "exact" ? fibwalk::AppendRule::exact(walks_n)
                                              : fibwalk::AppendRule::at_most(walks_n);
            print_walks(fibwalk::enumerate_walks(fibwalk::parse_nat(walks_start), rule,
                                                 walks_max_len));
            return kExitPass;
        }
        if (cmd_bound->parsed()) {
            if (!bound_theorem2) {
                std::cerr << "bound: --theorem2 is the only supported bound\n";
                return kExitUsage;
            }
            auto b = fibwalk::theorem2_bound(bound_n, bound_n0);
            if (b.degenerate)
                std::cout << "no append possible, longest walk = 1\n";
            else
                std::cout << b.bound << "\n";
            return kExitPass;
        }
        if (cmd_verify->parsed()) {
            if (list_checks) {
                for (const auto& name : fibwalk::battery_check_names(cfg)) std::cout << name << "\n";
                return kExitPass;
            }
            auto format = fibwalk::report_format_from_string(verify_format);
            auto report = fibwalk::run_battery(cfg, verify_target == "all" ? "" : verify_target);
            std::string doc = fibwalk::emit_report(report, format);
            if (verify_out.empty()) {
                std::cout << doc;
            } else {
                std::ofstream out(verify_out, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot open output file: " << verify_out << "\n";
                    return kExitUsage;
                }
                out << doc;
            }
            return report.all_passed() ? kExitPass : kExitVerifyFail;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}

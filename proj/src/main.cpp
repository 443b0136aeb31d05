#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lax/verify.hpp"

int main(int argc, char** argv) {
    lax::RunConfig cfg;
    CLI::App app{"Checks a lax localization engine against model files"};
    std::string commands;
    for (const auto& n : lax::command_names()) commands += (commands.empty() ? "" : ", ") + n;
    app.add_option("--model", cfg.model_path, "Model file (JSON)")->required();
    app.add_option("--command", cfg.command, "One of: " + commands)->required();
    app.add_option("--apex-bound", cfg.apex_bound, "Largest apex size of enumerated cospans");
    app.add_option("--ext-bound", cfg.ext_bound, "Largest middle object of enumerated 2-morphisms");
    app.add_option("--witness-bound", cfg.witness_bound, "Bound for witness searches (default: model default)");
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");
    app.add_option("--out", cfg.out, "Report path (default: stdout)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        const lax::Report rep = lax::run(cfg);
        const std::string text = lax::report_json(rep);
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(cfg.out, std::ios::binary);
            out << text;
            if (!out) {
                std::cerr << "error: cannot write " << cfg.out << "\n";
                return 2;
            }
        }
        return rep.passed() ? 0 : 1;
    } catch (const lax::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lax::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

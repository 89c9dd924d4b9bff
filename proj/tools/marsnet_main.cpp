// marsnet command-line front end: runs a scenario and writes CSV reports.

#include <iostream>

#include <CLI11.hpp>

#include "marsnet/runner.hpp"
#include "marsnet/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Low-Mars-orbit constellation simulator and feasibility toolkit"};
    app.set_version_flag("--version", std::string("marsnet ") + marsnet::MARSNET_VERSION);

    std::string config_path;
    std::string output_dir = "out";
    std::string command = "all";
    app.add_option("--config", config_path, "Scenario file (key=value lines); defaults apply when omitted");
    app.add_option("--output", output_dir, "Output directory for CSV reports");
    app.add_option("--command", command, "One of: coverage, rtt, route, handover, linkbudget, mass, apps, all");

    CLI11_PARSE(app, argc, argv);

    try {
        const marsnet::Scenario scenario = config_path.empty()
                                               ? marsnet::Scenario{}
                                               : marsnet::parse_scenario_file(config_path);
        marsnet::run_command(command, scenario, output_dir);
    } catch (const marsnet::ValidationError& e) {
        std::cerr << "marsnet: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "marsnet: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "marsnet: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "marsnet: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

// Regenerates the canonical scenario files shipped in scenarios/. Run with an
// optional output directory argument (default "scenarios").

#include <filesystem>
#include <iostream>

#include "btt/btt.hpp"

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "scenarios";
    std::filesystem::create_directories(dir);

    const auto write = [&](const std::string& name, const btt::ScenarioConfig& cfg) {
        const auto path = dir / (name + ".json");
        btt::save_scenario_file(cfg, path.string());
        std::cout << path.string() << "\n";
    };

    write("p1_d2", btt::build_p1(2));
    write("p1_d3", btt::build_p1(3));
    write("p1_d4", btt::build_p1(4));
    write("p2", btt::build_p2());
    write("p2_walled", btt::build_p2_walled());
    write("p3", btt::build_p3());
    return 0;
}

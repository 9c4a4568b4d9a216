// Compares single-worker and multi-worker enumeration on one system file,
// checking that the results agree byte for byte.
//
//   enum_bench SYSTEM MAX_STEPS [free|filtered] [JOBS]
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "obslang/go_system.hpp"
#include "obslang/sticker.hpp"
#include "obslang/system_file.hpp"

using namespace obslang;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ObservedLanguage run(const LoadedSystem& sys, std::size_t max_steps, Mode mode, int jobs) {
    if (sys.is_sticker())
        return enumerate_observed(sys.sticker(), ComputationBounds{max_steps}, mode, jobs);
    return enumerate(sys.go(), EnumerationBounds{max_steps, {}, {}}, mode, jobs);
}

std::string fingerprint(const LoadedSystem& sys, const ObservedLanguage& lang) {
    std::string out;
    for (const OutputWord& w : lang.words)
        out += sys.observer().render_output(w) + "\n";
    out += "exhausted=" + std::string(lang.exhausted ? "yes" : "no");
    out += " explored=" + std::to_string(lang.stats.forms_explored);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: enum_bench SYSTEM MAX_STEPS [free|filtered] [JOBS]\n";
        return 2;
    }
    try {
        LoadedSystem sys = parse_system(read_file(argv[1]));
        std::size_t max_steps = std::stoul(argv[2]);
        Mode mode = (argc > 3 && std::string(argv[3]) == "filtered") ? Mode::bottom_filtered
                                                                     : Mode::free;
        int jobs = argc > 4 ? std::stoi(argv[4]) : omp_get_max_threads();

        double t0 = omp_get_wtime();
        ObservedLanguage serial = run(sys, max_steps, mode, 1);
        double t1 = omp_get_wtime();
        ObservedLanguage parallel = run(sys, max_steps, mode, jobs);
        double t2 = omp_get_wtime();

        if (fingerprint(sys, serial) != fingerprint(sys, parallel)) {
            std::cerr << "mismatch between serial and parallel results\n";
            return 1;
        }

        double serial_s = t1 - t0, parallel_s = t2 - t1;
        std::cout << "system: " << argv[1] << "  max-steps: " << max_steps
                  << "  mode: " << (mode == Mode::free ? "free" : "filtered") << "\n";
        std::cout << "words: " << serial.words.size()
                  << "  explored: " << serial.stats.forms_explored << "\n";
        std::cout << "serial:   " << serial_s << " s\n";
        std::cout << "parallel: " << parallel_s << " s  (" << jobs << " jobs, speedup "
                  << (parallel_s > 0 ? serial_s / parallel_s : 0) << "x)\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

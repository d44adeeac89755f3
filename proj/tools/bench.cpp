// Benchmark: OpenMP kernels against their serial reference paths.
// Each kernel runs with Exec::Serial and Exec::Parallel on identical inputs;
// outputs are compared before timings are reported.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "prony/exec.hpp"
#include "prony/inversion.hpp"
#include "prony/leaves.hpp"

using namespace prony;

namespace {

double time_ms(const std::function<void()>& fn) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "outputs identical" : "OUTPUT MISMATCH");
}

} // namespace

int main() {
    std::printf("threads: %d\n", thread_cap());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const Signal f{{1.0, -2.0, 0.7}, {-0.8, 0.1, 0.9}};
        ErrorSetSample serial, parallel;
        const double t_s =
            time_ms([&] { serial = sample_error_set(f, 0.02, 20000, 7, Exec::Serial); });
        const double t_p =
            time_ms([&] { parallel = sample_error_set(f, 0.02, 20000, 7, Exec::Parallel); });
        bool equal = serial.accepted.size() == parallel.accepted.size();
        for (std::size_t i = 0; equal && i < serial.accepted.size(); ++i)
            equal = serial.accepted[i].nodes == parallel.accepted[i].nodes &&
                    serial.accepted[i].amplitudes == parallel.accepted[i].amplitudes;
        report("error-set sampling", t_s, t_p, equal);
    }

    {
        const LeafSpec spec{MomentVector{{1.0, 0.0, 1.0}}, 2, 2};
        const LeafProjection proj = leaf_projection_high_q(spec);
        LeafSamplerConfig cfg;
        cfg.grid = 200001;
        LeafPointCloud serial, parallel;
        const double t_s = time_ms([&] { serial = sample_leaf_projection(proj, cfg, Exec::Serial); });
        const double t_p =
            time_ms([&] { parallel = sample_leaf_projection(proj, cfg, Exec::Parallel); });
        bool equal = serial.points.size() == parallel.points.size();
        for (std::size_t i = 0; equal && i < serial.points.size(); ++i)
            equal = serial.points[i].params == parallel.points[i].params &&
                    serial.points[i].signal.nodes == parallel.points[i].signal.nodes;
        report("leaf projection sampling", t_s, t_p, equal);
    }

    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        auto cloud = [&](std::size_t n) {
            std::vector<Signal> c;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = u(rng);
                c.push_back(Signal{{u(rng), u(rng)}, {x - 1.0, x + 1.0}});
            }
            return c;
        };
        const std::vector<Signal> a = cloud(4096), b = cloud(4096);
        double d_s = 0.0, d_p = 0.0;
        const double t_s = time_ms([&] { d_s = hausdorff_distance(a, b, Exec::Serial); });
        const double t_p = time_ms([&] { d_p = hausdorff_distance(a, b, Exec::Parallel); });
        report("hausdorff distance 4096^2", t_s, t_p, d_s == d_p);
    }

    {
        const Signal g{{0.5, 0.5}, {-1.0, 1.0}};
        SweepConfig cfg;
        cfg.h_values = {0.2, 0.1};
        cfg.mode = SweepMode::Leaf;
        cfg.q = 2;
        cfg.budget = 512;
        cfg.leaf.cloud_size = 512;
        std::vector<ErrorSweepRecord> serial, parallel;
        const double t_s =
            time_ms([&] { serial = scaling_sweep(g, cfg, {2.0, 0.4, 0.6}, Exec::Serial).first; });
        const double t_p =
            time_ms([&] { parallel = scaling_sweep(g, cfg, {2.0, 0.4, 0.6}, Exec::Parallel).first; });
        bool equal = serial.size() == parallel.size();
        for (std::size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].rho_Sq[2] == parallel[i].rho_Sq[2] &&
                    serial[i].dist_to_leaf == parallel[i].dist_to_leaf;
        report("leaf-error sweep", t_s, t_p, equal);
    }

    return 0;
}

// Timings of the OpenMP kernels against their serial reference
// implementations: short-vector enumeration, Gauss sums, table verification.

#include <chrono>
#include <iostream>

#include "k3lat/roots.hpp"
#include "k3lat/tables.hpp"

using namespace k3lat;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms << " ms, speedup "
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
}

}  // namespace

int main() {
    {
        Lattice e8e8 = direct_sum({lattices::E(8), lattices::E(8)});
        volatile size_t sink = 0;
        double s = time_ms([&] { sink = short_vectors_serial(e8e8, -8).size(); });
        double p = time_ms([&] { sink = short_vectors(e8e8, -8).size(); });
        report("short_vectors(2E8, -8)", s, p);
        (void)sink;
    }
    {
        std::vector<Lattice> parts(17, lattices::A(1));
        FiniteQuadraticForm q = discriminant_form(direct_sum(parts));  // |A| = 2^17
        volatile int sink = 0;
        double s = time_ms([&] { sink = gauss_signature_serial(q); });
        double p = time_ms([&] { sink = gauss_signature(q); });
        report("gauss_signature(17A1)", s, p);
        (void)sink;
    }
    {
        volatile size_t sink = 0;
        double s = time_ms([&] { sink = verify_tables(0, 0, false).size(); }, 1);
        double p = time_ms([&] { sink = verify_tables(0, 0, true).size(); }, 1);
        report("verify_tables", s, p);
        (void)sink;
    }
    return 0;
}

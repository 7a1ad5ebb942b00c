// End-to-end run of the reduction on K4: build H, turn a minimum vertex cover
// of G' into a burning sequence of H, and read it back.

#include <iostream>

#include "burnkit/burnkit.hpp"

int main() {
    using namespace burnkit;

    Graph k4 = complete_graph(4);
    ReductionInstance inst = build_H(k4);
    const auto& p = inst.params;
    std::cout << "G' has " << inst.g_prime().order() << " vertices, " << inst.g_prime().size() << " edges\n"
              << "CN=" << p.cn << " h=" << p.h << " l1=" << p.l1 << " l2=" << p.l2 << " d1=" << p.d1
              << " d2=" << p.d2 << " m=" << p.m << "\n"
              << "H has " << inst.h.order() << " vertices, cubic=" << is_regular(inst.h, 3)
              << ", connected=" << is_connected(inst.h) << "\n";

    SolveResult cover = vertex_cover_exact(inst.g_prime());
    BurningSequence seq = vc_to_witness(inst, cover.witness);
    BurningSchedule s = simulate(inst.h, seq);
    std::cout << "cover of size " << cover.value << " -> sequence of length " << seq.size()
              << ", burns everything by step " << s.last_burn_step() << "\n";

    AuditReport audit = audit_sequence(inst, seq);
    std::cout << "owners:";
    for (const auto& v : audit.owners) std::cout << ' ' << v;
    std::cout << "\nunrepresented edges: " << audit.unrepresented.size()
              << "\n|BL cap UB| = " << audit.last_unique.size() << "\n";

    BurningSequence shorter(seq.begin(), seq.end() - 1);
    std::cout << "without the last source: " << simulate(inst.h, shorter).unburned_count() << " vertices unburned\n";
    return 0;
}

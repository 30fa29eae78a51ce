#include "atiyah/bott.hpp"

namespace atiyah {

std::vector<std::pair<std::string, int>> convention_table() {
    const auto& c = bott_conventions();
    return {{"upsilon_k0", c.upsilon[0]}, {"upsilon_k1", c.upsilon[1]}, {"upsilon_k2", c.upsilon[2]},
            {"rectangle", c.rectangle},   {"theorem", c.theorem},       {"eta", c.eta_sign},
            {"chern_simons", c.cs_sign}};
}

OneFormFamily<AlgebroidCalc> kappa_family(const Group& G, const FdConfig& fd) {
    const Group* gp = &G;
    OneFormFamily<AlgebroidCalc> out;
    out.at = [gp](double t) { return kappa_form(*gp, t); };
    out.dot = [gp, fd](double t) { return kappa_dot_form(*gp, t, fd); };
    out.gauge = [](const Mat& g) { return g; };
    return out;
}

OneFormFamily<GroupFrames> alpha_family(const ConnectionFamily& alpha) {
    OneFormFamily<GroupFrames> out;
    out.at = [alpha](double t) { return alpha.form(t); };
    out.dot = [alpha](double t) { return alpha.dot_form(t); };
    out.gauge = [](const GroupFrames::Point& p) { return p[0]; };
    return out;
}

MixedForm<AlgebroidCalc, double> varpi_p(const AlgebroidCalc& calc, const InvariantPolynomial& p,
                                         const std::optional<Vec>& x, int t_points) {
    const Group& G = *calc.group;
    const auto kappa = kappa_family(G, calc.fd);
    MixedForm<AlgebroidCalc, double> out = family_integral(calc, G, p, kappa, x, 8, t_points);
    const AlgebroidFormG zero = zero_connection<AlgebroidCalc>(G.dim());
    const AlgebroidFormG theta = pullback_a(maurer_cartan_form(G, Side::left));
    const auto corner = bott(calc, G, p, {zero, theta, kappa.at(0.0)}, x);
    for (const auto& [k, f] : corner.parts) out.add(f, -1.0);
    return out;
}

MixedForm<GroupFrames, double> eta_p(const GroupFrames& calc, const InvariantPolynomial& p,
                                     const std::optional<Vec>& x) {
    const Group& G = *calc.group;
    return bott(calc, G, p, {zero_connection<GroupFrames>(G.dim()), maurer_cartan_form(G, Side::left)}, x);
}

}  // namespace atiyah

/**
 * @file suites.cpp
 * @brief The suite registry.
 */
#include "suites.hpp"

namespace fh::harness {

namespace {

ParamInfo fault(std::vector<std::string> extra = {}) {
    std::vector<std::string> w{"none", "psi"};
    w.insert(w.end(), extra.begin(), extra.end());
    return {"fault", Kind::Word, w};
}

ParamInfo cases() { return {"cases", Kind::Int, {}}; }
ParamInfo range() { return {"range", Kind::Int, {}}; }
ParamInfo cap() { return {"cap", Kind::Cap, {}}; }

std::vector<ParamInfo> random_params() { return {cases(), range(), cap(), fault()}; }

std::vector<SuiteInfo> build() {
    using namespace detail;
    return {
        {"poisson0",
         "Poisson formula for subspaces of F_q^n",
         {"F(delta_H) = #H delta_{H-perp}"},
         {{"n", Kind::Dim, {}}, fault({"measure"})},
         suite_poisson0},
        {"fourier0_laws",
         "Inversion, self-adjointness and functoriality of the finite transform",
         {"F(F(f)) = #V check(f)", "<F f, g> = <f, F g>", "F(pi_* f) = (pi')^* F(f)", "F(pi^* g)/#V = (pi')_*(F(g)/#W)"},
         {cases(), {"max_dim", Kind::Dim, {}}, fault()},
         suite_fourier0_laws},
        {"character",
         "The additive character of F_q",
         {"psi(x+y) = psi(x) psi(y)", "psi is nontrivial", "sum of psi over F_q vanishes"},
         {fault()},
         suite_character},
        {"poisson1",
         "Poisson formula for lattices and configured one-dimensional triples",
         {"F(delta_{E1,mu1}) = delta_{E3^,mu1/mu2}"},
         {{"triples", Kind::Triple1, {}},
          {"lattices", Kind::IntList, {}},
          {"scales", Kind::Scalars, {}},
          range(),
          cap(),
          fault({"transition", "measure"})},
         suite_poisson1},
        {"haar_lattice_fourier",
         "Transforms of lattice indicators",
         {"F_mu(delta_{F(i)}) = mu(F(i)) delta_{F(i)-perp}"},
         {{"levels", Kind::IntList, {}}, {"scales", Kind::Scalars, {}}, range(), cap(), fault()},
         suite_haar_lattice_fourier},
        {"fourier1_laws",
         "Inversion and duality of the one-dimensional transform",
         {"F_{mu^} F_mu f = check f", "F(G)(g) = G(F g)", "F(mu) = delta_0", "F(1) = delta_0"},
         random_params(),
         suite_fourier1_laws},
        {"fubini", "Integration along a triple", {"int_E3 beta_*(f mu1) dmu3 = int_E2 f dmu2"}, random_params(), suite_fubini},
        {"projection",
         "Projection formulas and compatibility of images with densities",
         {"beta_*(f beta^*g mu1) = beta_*(f mu1) g on D", "beta_*(f beta^*g mu1) = beta_*(f mu1) g on E",
          "alpha_*(f alpha^*g) = alpha_*(f) g", "I_mu2(beta^* g) = beta^*(I_mu3 g)", "I_mu3(beta_*(f mu1)) = beta_*(I_mu2 f)"},
         random_params(),
         suite_projection},
        {"composition",
         "Images along composed epimorphisms and monomorphisms",
         {"(beta beta')_*(f nu mu) = beta_*(beta'_*(f nu) mu) on D",
          "(beta beta')^*(G nu mu) = beta'^*(beta^*(G mu) nu) on D'",
          "(beta beta')^* f = beta'^* beta^* f on E",
          "(beta beta')_* G = beta_* beta'_* G on compactly supported E~'",
          "(beta beta')^* f = beta'^* beta^* f on D",
          "(beta beta')_* G = beta_* beta'_* G on D'",
          "(beta beta')_*(f nu mu) = beta_*(beta'_*(f nu) mu) on E",
          "(beta beta')^*(G nu mu) = beta'^*(beta^*(G mu) nu) on E~'",
          "(alpha' alpha)^* f = alpha^* alpha'^* f on D",
          "(alpha' alpha)_* G = alpha'_* alpha_* G on D'",
          "(alpha' alpha)^* f = alpha^* alpha'^* f on E",
          "(alpha' alpha)_* G = alpha'_* alpha_* G on E~'",
          "(alpha' alpha)_* f = alpha'_* alpha_* f on D",
          "(alpha' alpha)^* G = alpha^* alpha'^* G on D'",
          "(alpha' alpha)_* f = alpha'_* alpha_* f on E",
          "(alpha' alpha)^* G = alpha^* alpha'^* G on E~'"},
         random_params(),
         suite_composition},
        {"base_change",
         "Base change around the square of a two-step filtration",
         {"gamma^* beta_*(f mu) = (gamma_beta)_*(beta_gamma^* f mu) on D",
          "beta^*(gamma_* G mu) = (beta_gamma)_* gamma_beta^*(G mu) on D'",
          "gamma_beta^* gamma^* f = beta_gamma^* beta^* f on E",
          "beta_*(beta_gamma)_* G = gamma_*(gamma_beta)_* G on E~'",
          "gamma_beta^* gamma^* f = beta_gamma^* beta^* f on D, E1 compact",
          "beta_*(beta_gamma)_* G = gamma_*(gamma_beta)_* G on D', E1 compact",
          "beta_*((beta_gamma)_* f mu) = gamma_*(gamma_beta)_*(f mu) on D, B discrete",
          "gamma_beta^*(gamma^* G mu) = beta_gamma^* beta^*(G mu) on D', B discrete",
          "beta^* gamma_* f = (beta_gamma)_* gamma_beta^* f on D",
          "gamma^* beta_* G = (gamma_beta)_* beta_gamma^* G on D'",
          "beta_*((beta_gamma)_* f mu) = gamma_*(gamma_beta)_*(f mu) on E",
          "gamma_beta^*(gamma^* G mu) = beta_gamma^* beta^*(G mu) on E~'"},
         random_params(),
         suite_base_change},
        {"fourier_image",
         "The transform exchanges direct and inverse images",
         {"F(beta_*(f mu1)) = beta^^* F(f)", "F(alpha^* f) = alpha^_*(F(f) mu3^)", "F(beta^*(G mu1)) = beta^_* F(G)",
          "F(alpha_* G) = alpha^^*(F(G) mu3^)", "F(beta^* f) = beta^_* F(f) on E", "F(alpha_* G) = alpha^^* F(G) on E~'",
          "F(alpha^* f) = alpha^_* F(f) on E", "F(beta_* G) = beta^^* F(G) on E~'"},
         random_params(),
         suite_fourier_image},
        {"virtual_measure",
         "Virtual measures: composition, canonical measures and duality",
         {"mu mu^{-1} = 1", "(mu nu) rho = mu (nu rho)", "1_{ij} 1_{jk} = 1_{ik}", "delta_{ij} delta_{jk} = delta_{ik}",
          "1_{ij} on E = delta_{-i,-j} on E^", "1_{ij} gives F(j)/F(i) total mass 1",
          "delta_{ij} gives the origin of F(j)/F(i) mass 1"},
         {range(), fault()},
         suite_virtual_measure},
        {"poisson2_I",
         "Poisson formula for characteristic distributions, and its transport by monomial automorphisms",
         {"F(delta_{E1,mu x nu}) = delta_{E3^,nu x mu}"},
         {{"triples", Kind::Triple2, {}},
          {"lattices", Kind::IntList, {}},
          {"basepoints", Kind::IntList, {}},
          {"scales", Kind::Scalars, {}},
          {"corollary", Kind::Word, {"yes", "no"}},
          range(),
          cap(),
          fault({"measure"})},
         suite_poisson2_I},
        {"poisson2_II",
         "Poisson formula for characteristic functions, and its transport by monomial automorphisms",
         {"F(delta_{E1}) = delta_{E3^}"},
         {{"triples", Kind::Triple2, {}},
          {"lattices", Kind::IntList, {}},
          {"basepoints", Kind::IntList, {}},
          {"corollary", Kind::Word, {"yes", "no"}},
          range(),
          cap(),
          fault()},
         suite_poisson2_II},
        {"central_ext",
         "Group law of the central extension of monomial automorphisms",
         {"[t, u] lies over the identity", "[t, u] = q", "(xy)z = x(yz)", "x x^{-1} = 1", "x^{-1} x = 1",
          "projection to the automorphism group is a homomorphism", "[x, y] = q^{a b' - b a'}",
          "dual map is a homomorphism"},
         {cases(), fault()},
         suite_central_ext},
        {"representation",
         "Representations on functions and distributions",
         {"R_g R_h = R_{gh}", "R'_g R'_h = R'_{gh}", "R_g(f x) = r_g(f) R_g(x)", "R'_g(f G) = r_g(f) R'_g(G)",
          "<R'_g G, R_g x> = <G, x>"},
         random_params(),
         suite_representation},
        {"fourier_intertwine",
         "The two-dimensional transform: intertwining, inversion and duality",
         {"F R_g = R_{g^} F on D", "F R'_g = R'_{g^} F on D'", "F r_g = r'_{g^} F on E", "F F x = check x", "F F G = check G",
          "<F x, H> = <x, F H>", "F(x tensor mu) = F(x) tensor mu^", "F commutes with reindexing",
          "alpha^*(alpha_* x) = nu x"},
         random_params(),
         suite_fourier_intertwine},
        {"base_change2",
         "Composition and base change of two-dimensional images",
         {"(beta beta')_* = beta_* beta'_* on D", "(beta beta')^* = beta'^* beta^* on D'",
          "(beta beta')^* = beta'^* beta^* on D", "(beta beta')_* = beta_* beta'_* on D'",
          "(alpha' alpha)^* = alpha^* alpha'^* on D", "(alpha' alpha)_* = alpha'_* alpha_* on D'",
          "(alpha' alpha)_* = alpha'_* alpha_* on D", "(alpha' alpha)^* = alpha^* alpha'^* on D'",
          "gamma^* beta_* = (gamma_beta)_* beta_gamma^* on D", "beta^* gamma_* = (beta_gamma)_* gamma_beta^* on D'",
          "gamma_beta^* gamma^* = beta_gamma^* beta^* on D", "beta_* (beta_gamma)_* = gamma_* (gamma_beta)_* on D'",
          "beta_* (beta_gamma)_* = gamma_* (gamma_beta)_* on D", "gamma_beta^* gamma^* = beta_gamma^* beta^* on D'",
          "beta^* gamma_* = (beta_gamma)_* gamma_beta^* on D", "gamma^* beta_* = (gamma_beta)_* beta_gamma^* on D'"},
         random_params(),
         suite_base_change2},
        {"fourier_image2",
         "The two-dimensional transform exchanges direct and inverse images",
         {"F beta_* = beta^^* F on D", "F beta^* = beta^_* F on D'", "F alpha^* = alpha^_* F on D",
          "F alpha_* = alpha^^* F on D'", "F beta^* = beta^_* F on D", "F beta_* = beta^^* F on D'",
          "F alpha_* = alpha^^* F on D", "F alpha^* = alpha^_* F on D'"},
         random_params(),
         suite_fourier_image2},
    };
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> cat = build();
    return cat;
}

}  // namespace fh::harness

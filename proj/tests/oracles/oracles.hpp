#pragma once

// Reference implementations used only by the tests. None of them calls into
// the library: actions are evaluated on explicit 0/1 strings, eigenvalues by
// cyclic Jacobi rotations, spectra of the dihedral operator by a transfer
// matrix scan.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// First `length` symbols of the word "PRE:PERIOD" as a digit string.
std::string expand_omega(const std::string& pre_period, std::size_t length);

/// Image of the 0/1 string `v` under the generator `g` ('a'..'d') of G_omega,
/// with `omega` given as a digit string at least v.size() long.
std::string act(char g, const std::string& omega, const std::string& v);

/// Image of `v` under a word; the rightmost letter acts first.
std::string act_word(const std::string& word, const std::string& omega, const std::string& v);

/// All 0/1 strings of length n in lexicographic order.
std::vector<std::string> level_strings(unsigned n);

/// |B_r| for r = 0..radius: breadth-first search over group elements, each
/// element stored as its table of images of all level-`depth` strings.
std::vector<std::size_t> growth_by_brute_force(const std::string& pre_period,
                                               unsigned radius, unsigned depth);

/// Eigenvalues of a real symmetric matrix (row-major), ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

/// Spectrum of x s + y t on l^2(D_inf) from |trace T(E)| <= 2 for the
/// one-period transfer matrix T(E), scanned on a grid and refined by
/// bisection. Returns the bands as (lo, hi) pairs, ascending.
std::vector<std::pair<double, double>> dihedral_bands(double x, double y,
                                                      std::size_t grid = 20000);

/// Roots of t^2 - tr t + det, ascending.
std::pair<double, double> quadratic_roots(double trace, double det);

}  // namespace oracle

// Solves G(3,1,2) in the default order and prints the Kostka matrices
// together with the IC^- comparison.

#include <iostream>

#include "kostka/kostka.hpp"

int main() {
    using namespace kostka;
    const auto order = default_total_order(2, 3);
    const auto res = solve_factorization(omega_matrix(order));

    std::cout << io::diagonal_csv(res) << '\n';
    std::cout << "P-\n" << io::matrix_csv(order, res.p_minus) << '\n';
    std::cout << "P+\n" << io::matrix_csv(order, res.p_plus) << '\n';

    const auto ic = ic_minus_matrix(res);
    std::cout << "t^-a P- lies in Z[t^3]: " << (ic.all_valid() ? "yes" : "no") << '\n';
    std::cout << "IC- (in t^3)\n" << io::matrix_csv(order, ic.in_s);
}

// Builds the Fourier-side step operator for a small cutoff and shows that it
// factors as g^-1 times a function of H.

#include <cstdio>
#include <cstdlib>

#include "qpolar/qpolar.hpp"

int main(int argc, char** argv) {
  const int s = argc > 1 ? std::atoi(argv[1]) : 4;
  const auto cfg = qpolar::make_config(s);

  std::printf("q = exp(2 pi i/%d)\n", cfg.dim());
  std::printf("q-numbers:");
  for (int n = 0; n <= s + 1; ++n) std::printf(" %.6f", qpolar::q_number(n, cfg));
  std::printf("\n");

  const auto polar = qpolar::polar_decompose(cfg);
  std::printf("|a~ - g^-1 sqrt{H^dag}|       = %.3e\n", polar.reconstruction_error);
  std::printf("|a~ - sqrt{H^dag+1} g^-1|     = %.3e\n", polar.alternate_annihilation_error);
  std::printf("|a~dag - sqrt{H^dag} g|       = %.3e\n", polar.creation_error);
  std::printf("|a~dag - g sqrt{H^dag+1}|     = %.3e\n", polar.alternate_creation_error);
  std::printf("unitary factor is unitary:     %s\n",
              qpolar::is_unitary(polar.unitary, 1e-12) ? "yes" : "no");
  std::printf("radial factor self-adjoint:    %s\n",
              polar.radial_is_conjugate_symmetric ? "yes" : "no (some [n] < 0)");
  return 0;
}

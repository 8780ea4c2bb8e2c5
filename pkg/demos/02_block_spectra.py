"""Split the normalized Laplacian spectrum into its two reflection blocks.

Swapping the two rims is an automorphism of every chain, so the
normalized Laplacian decomposes into a symmetric block of order 3n
(entries in the field extended by sqrt(3)) and a skew block of order 2n
(rational entries).  The union of the block spectra is the full
spectrum; the leading characteristic polynomial coefficients of each
block carry the index formulas in closed form.
"""

from fractions import Fraction

from pentachain import ChainFamily, build_chain, decompose, decomposed_spectra
from pentachain.closed_form import skew_recip_sum, surd_pair, sym_recip_sum
from pentachain.spectral import skew_block_tail, sym_block_tail


def show_blocks(n: int, family: ChainFamily) -> None:
    g = build_chain(n, family)
    sym, skew = decompose(g)
    print(f"{family.value} chain, n={n}:")
    print(f"  symmetric block {len(sym)}x{len(sym)}, skew block {len(skew)}x{len(skew)}")
    print(f"  skew corner entry 3*{skew[0][-1]} = {3 * skew[0][-1]}")

    spectra = decomposed_spectra(g)
    print(f"  sym eigenvalues   {[round(x, 4) for x in spectra.rho[:4]]} ...")
    print(f"  skew eigenvalues  {[round(x, 4) for x in spectra.mu[:4]]} ...")
    print(f"  union check error {spectra.union_err:.2e}")


def show_tails(n: int) -> None:
    g_cyl = build_chain(n, ChainFamily.CYLINDER)
    g_mob = build_chain(n, ChainFamily.MOBIUS)
    lin, quad = sym_block_tail(g_cyl)
    assert (lin, quad) == sym_block_tail(g_mob)  # family independent
    print(f"\ncharacteristic polynomial tails at n={n}:")
    print(f"  sym linear coeff    {lin}")
    print(f"  sym quadratic coeff {quad}")
    print(f"  ratio -quad/lin     {-quad / lin}  == reciprocal sum {sym_recip_sum(n)}")

    p, q = surd_pair(n)
    for g, family, shift in ((g_cyl, ChainFamily.CYLINDER, -2), (g_mob, ChainFamily.MOBIUS, 2)):
        sub, det = skew_block_tail(g)
        print(f"  {family.value}: skew det {det}  == (2*{p}{shift:+d})/3^{2*n}"
              f" = {Fraction(2 * p + shift, 3 ** (2 * n))}")
        print(f"    -sub/det {-sub / det}  == reciprocal sum {skew_recip_sum(n, family)}")


def main() -> None:
    for family in ChainFamily:
        show_blocks(3, family)
        print()
    show_tails(3)


if __name__ == "__main__":
    main()

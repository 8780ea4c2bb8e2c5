"""Closed-form invariants of the pentagonal chain families.

Everything here is exact: surd arithmetic reduces to integer pairs
(p, q) with p + q*sqrt(6) = (5 + 2*sqrt(6))^n, and all index values are
Fractions or ints.  The determinant helpers cover the family of marked
and cut path/cycle matrices that the block eliminations reduce to; each
formula has a matching constructor so the identities can be checked
against a generic determinant routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import ChainFamily
from .numerics import QuadInt

# ---------------------------------------------------------------------------
# surd arithmetic


def surd_pair(n: int) -> tuple[int, int]:
    """(p, q) with p + q*sqrt(6) = (5 + 2*sqrt(6))^n.

    5 + 2*sqrt(6) = (sqrt(3) + sqrt(2))^2, so these pairs carry all the
    closed forms' surd content.  p^2 - 6 q^2 = 1 and q is even for all n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    z = QuadInt(5, 2, 6) ** n
    return z.a, z.b


# ---------------------------------------------------------------------------
# marked/cut path and cycle matrices with closed-form determinants


def path_matrix(order: int) -> list[list[int]]:
    """Tridiagonal matrix with -2 on the diagonal and 1 off it."""
    if order < 0:
        raise ValueError("order must be >= 0")
    m = [[0] * order for _ in range(order)]
    for i in range(order):
        m[i][i] = -2
        if i + 1 < order:
            m[i][i + 1] = 1
            m[i + 1][i] = 1
    return m


def path_det(order: int) -> int:
    return (-1) ** order * (order + 1)


def path_marked_matrix(order: int, mark: int) -> list[list[int]]:
    """Path matrix with the (mark, mark) diagonal entry lowered to -3."""
    if not 1 <= mark <= order:
        raise ValueError("mark must be in 1..order")
    m = path_matrix(order)
    m[mark - 1][mark - 1] = -3
    return m


def path_marked_det(order: int, mark: int) -> int:
    n, m = order, mark
    return (-1) ** n * (1 + n + m + m * n - m * m)


def path_marked2_matrix(order: int, s: int, t: int) -> list[list[int]]:
    """Path matrix with -3 marks at positions s < t."""
    if not 1 <= s < t <= order:
        raise ValueError("need 1 <= s < t <= order")
    m = path_matrix(order)
    m[s - 1][s - 1] = -3
    m[t - 1][t - 1] = -3
    return m


def path_marked2_det(order: int, s: int, t: int) -> int:
    p = order
    return (-1) ** p * (
        p * t * (s + 1)
        + s * (p + t)
        + (p + s + t + 1)
        - s * s * (p + 2 - t)
        - t * t * (s + 1)
    )


def _cycle_base(order: int) -> list[list[int]]:
    # path matrix closed into a ring by corner ones
    m = path_matrix(order)
    if order >= 2:
        m[0][order - 1] += 1
        m[order - 1][0] += 1
    return m


def _delete_positions(m: list[list[int]], positions: set[int]) -> list[list[int]]:
    keep = [i for i in range(len(m)) if i + 1 not in positions]
    return [[m[r][c] for c in keep] for r in keep]


def cycle_marked_matrix(n: int, i: int) -> list[list[int]]:
    """Order-2n ring matrix with one -3 mark at position 2i."""
    if not 1 <= i <= n:
        raise ValueError("i must be in 1..n")
    m = _cycle_base(2 * n)
    m[2 * i - 1][2 * i - 1] = -3
    return m


def cycle_marked_det(n: int, i: int) -> int:
    return 2 * n


def cycle_marked2_matrix(n: int, i: int, j: int) -> list[list[int]]:
    """Order-2n ring matrix with -3 marks at positions 2i and 2j, i < j."""
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    m = _cycle_base(2 * n)
    m[2 * i - 1][2 * i - 1] = -3
    m[2 * j - 1][2 * j - 1] = -3
    return m


def cycle_marked2_det(n: int, i: int, j: int) -> int:
    return 4 * n + 8 * i * j - 4 * n * (i - j) - 4 * (i * i + j * j)


def cycle_cut_matrix(n: int, i: int) -> list[list[int]]:
    """Ring matrix of order 2n with position i-n deleted (order 2n-1).

    The parameter i runs over n+1..3n; corner entries survive exactly
    when positions 1 and 2n both do.
    """
    if not n + 1 <= i <= 3 * n:
        raise ValueError("i must be in n+1..3n")
    return _delete_positions(_cycle_base(2 * n), {i - n})


def cycle_cut_det(n: int, i: int) -> int:
    return -2 * n


def cycle_cut2_matrix(n: int, i: int, j: int) -> list[list[int]]:
    """Ring matrix of order 2n with positions i-n and j-n deleted, i < j."""
    if not (n + 1 <= i < j <= 3 * n):
        raise ValueError("need n+1 <= i < j <= 3n")
    return _delete_positions(_cycle_base(2 * n), {i - n, j - n})


def cycle_cut2_det(n: int, i: int, j: int) -> int:
    return 2 * i * j + 2 * n * (j - i) - (i * i + j * j)


def cycle_marked_cut_matrix(n: int, i: int, j: int) -> list[list[int]]:
    """Ring matrix with a -3 mark at position 2i and position j-n deleted."""
    if not 1 <= i <= n:
        raise ValueError("i must be in 1..n")
    if not n + 1 <= j <= 3 * n:
        raise ValueError("j must be in n+1..3n")
    return _delete_positions(cycle_marked_matrix(n, i), {j - n})


def cycle_marked_cut_det(n: int, i: int, j: int) -> int:
    c = j - n
    base = c * c - 4 * c * i + 4 * i * i - 2 * n
    if 2 * i <= c:
        return base - 2 * n * (c - 2 * i)
    return base + 2 * n * (c - 2 * i)


def lemma_grid(max_order: int = 24) -> list[tuple[str, dict, list[list[int]], int]]:
    """(name, params, matrix, closed-form determinant) for every grid case.

    Path families run over all orders up to max_order; the two-parameter
    cycle families are exhaustive at small orders and strided near the
    cap so the whole grid stays a few thousand cases.
    """
    cases: list[tuple[str, dict, list[list[int]], int]] = []
    for order in range(1, max_order + 1):
        cases.append(("path", {"order": order}, path_matrix(order), path_det(order)))
        for mark in range(1, order + 1):
            cases.append(
                (
                    "path_marked",
                    {"order": order, "mark": mark},
                    path_marked_matrix(order, mark),
                    path_marked_det(order, mark),
                )
            )
    marked2_orders = [p for p in range(2, 15) if p <= max_order]
    if max_order >= 15:
        marked2_orders.append(max_order)
    for p in marked2_orders:
        for s in range(1, p):
            for t in range(s + 1, p + 1):
                cases.append(
                    (
                        "path_marked2",
                        {"order": p, "s": s, "t": t},
                        path_marked2_matrix(p, s, t),
                        path_marked2_det(p, s, t),
                    )
                )
    n_cap = max_order // 2
    for n in range(2, n_cap + 1):
        for i in range(1, n + 1):
            cases.append(
                (
                    "cycle_marked",
                    {"n": n, "i": i},
                    cycle_marked_matrix(n, i),
                    cycle_marked_det(n, i),
                )
            )
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                cases.append(
                    (
                        "cycle_marked2",
                        {"n": n, "i": i, "j": j},
                        cycle_marked2_matrix(n, i, j),
                        cycle_marked2_det(n, i, j),
                    )
                )
        for i in range(n + 1, 3 * n + 1):
            cases.append(
                (
                    "cycle_cut",
                    {"n": n, "i": i},
                    cycle_cut_matrix(n, i),
                    cycle_cut_det(n, i),
                )
            )
        exhaustive = n <= 9
        cut_positions = (
            list(range(n + 1, 3 * n + 1))
            if exhaustive
            else list(range(n + 1, 3 * n + 1, 3))
        )
        for a in range(len(cut_positions)):
            for b in range(a + 1, len(cut_positions)):
                i, j = cut_positions[a], cut_positions[b]
                cases.append(
                    (
                        "cycle_cut2",
                        {"n": n, "i": i, "j": j},
                        cycle_cut2_matrix(n, i, j),
                        cycle_cut2_det(n, i, j),
                    )
                )
        mark_positions = list(range(1, n + 1)) if exhaustive else [1, n // 2, n]
        for i in mark_positions:
            for j in cut_positions:
                cases.append(
                    (
                        "cycle_marked_cut",
                        {"n": n, "i": i, "j": j},
                        cycle_marked_cut_matrix(n, i, j),
                        cycle_marked_cut_det(n, i, j),
                    )
                )
    return cases


# ---------------------------------------------------------------------------
# the integer skew-block matrix (3 times the skew block)


def skew_int_matrix(n: int, family: ChainFamily) -> list[list[int]]:
    """Three times the skew block: alternating 4/3 diagonal, -1 band,
    corner -1 (cylinder) or +1 (Mobius)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    order = 2 * n
    m = [[0] * order for _ in range(order)]
    for r in range(order):
        m[r][r] = 4 if r % 2 == 0 else 3
        if r + 1 < order:
            m[r][r + 1] = -1
            m[r + 1][r] = -1
    corner = 1 if family is ChainFamily.MOBIUS else -1
    m[0][order - 1] += corner
    m[order - 1][0] += corner
    return m


def skew_int_det(n: int, family: ChainFamily) -> int:
    p, _ = surd_pair(n)
    return 2 * p + 2 if family is ChainFamily.MOBIUS else 2 * p - 2


def skew_int_cofactor_sum(n: int) -> int:
    """Sum of all principal minors of order 2n-1 of the cylinder matrix."""
    _, q = surd_pair(n)
    assert q % 2 == 0
    return 7 * n * q // 2


# ---------------------------------------------------------------------------
# reciprocal eigenvalue sums and the index closed forms


def sym_recip_sum(n: int) -> Fraction:
    """Sum of reciprocal nonzero eigenvalues of the symmetric block."""
    _require_n(n)
    return Fraction(49 * n * n + 42 * n - 19, 42)


def skew_recip_sum(n: int, family: ChainFamily) -> Fraction:
    """Sum of reciprocal eigenvalues of the skew block."""
    _require_n(n)
    p, q = surd_pair(n)
    den = p + 1 if family is ChainFamily.MOBIUS else p - 1
    return Fraction(21 * n * q, 4 * den)


def _require_n(n: int) -> None:
    if n < 2:
        raise ValueError("n must be >= 2")


def kf_star(n: int, family: ChainFamily) -> Fraction:
    """Degree-weighted resistance sum over all vertex pairs, exact."""
    return 14 * n * (sym_recip_sum(n) + skew_recip_sum(n, family))


def kemeny(n: int, family: ChainFamily) -> Fraction:
    """Expected hitting time to stationarity; kf_star divided by 14n."""
    return kf_star(n, family) / (14 * n)


def spanning_trees(n: int, family: ChainFamily) -> int:
    """Spanning tree count, exact."""
    _require_n(n)
    p, _ = surd_pair(n)
    base = p + 1 if family is ChainFamily.MOBIUS else p - 1
    return 2 ** (n + 1) * n * base


def gutman(n: int, family: ChainFamily) -> int:
    """Degree-weighted Wiener sum (product of endpoint degrees)."""
    _require_n(n)
    if family is ChainFamily.MOBIUS:
        tail = -13 * n if n % 2 == 0 else -14 * n
    else:
        tail = 5 * n if n % 2 == 0 else 4 * n
    return 49 * n**3 + 64 * n**2 + tail


def schultz(n: int, family: ChainFamily) -> int:
    """Degree-weighted Wiener sum (sum of endpoint degrees)."""
    _require_n(n)
    if family is ChainFamily.MOBIUS:
        tail = -10 * n if n % 2 == 0 else -11 * n
    else:
        tail = 2 * n if n % 2 == 0 else n
    return 35 * n**3 + 48 * n**2 + tail


def gutman_kf_ratio(n: int, family: ChainFamily) -> Fraction:
    return Fraction(gutman(n, family)) / kf_star(n, family)


def ratio_diagnostics(ns, family: ChainFamily) -> list[tuple[int, Fraction, str]]:
    """(n, exact ratio, 4-decimal rendering) for each n; approaches 3."""
    out = []
    for n in ns:
        r = gutman_kf_ratio(n, family)
        out.append((n, r, decimal_string(r, 4)))
    return out


# ---------------------------------------------------------------------------
# decimal rendering (round half to even; exact for terminating fractions)


def decimal_string(value: Fraction, places: int = 4) -> str:
    """Fixed-point decimal string, round half to even, trailing zeros kept."""
    if places < 0:
        raise ValueError("places must be >= 0")
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    value = abs(value)
    scale = 10**places
    scaled = value * scale
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r > scaled.denominator or (2 * r == scaled.denominator and q % 2 == 1):
        q += 1
    digits = str(q)
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    return sign + digits[:-places] + "." + digits[-places:]


def is_terminating(value: Fraction) -> bool:
    d = Fraction(value).denominator
    for base in (2, 5):
        while d % base == 0:
            d //= base
    return d == 1


def table_number(value: Fraction) -> str:
    """Table rendering: exact minimal decimal if terminating, else 4 places."""
    value = Fraction(value)
    if not is_terminating(value):
        return decimal_string(value, 4)
    places = 0
    d = value.denominator
    for base in (2, 5):
        while d % base == 0:
            d //= base
            places += 1
    s = decimal_string(value, places)
    if places:
        s = s.rstrip("0").rstrip(".")
    return s


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class IndexReport:
    """All closed-form invariants of one chain graph."""

    n: int
    family: ChainFamily
    kf_star: Fraction
    kemeny: Fraction
    tau: int
    gutman: int
    schultz: int
    ratio: Fraction

    def to_dict(self, precision: int | None = None) -> dict:
        def render(fr: Fraction) -> str:
            if precision is None:
                return table_number(fr)
            return decimal_string(fr, precision)

        return {
            "n": self.n,
            "family": self.family.value,
            "kf_star": {
                "num": self.kf_star.numerator,
                "den": self.kf_star.denominator,
                "decimal": render(self.kf_star),
            },
            "kemeny": {
                "num": self.kemeny.numerator,
                "den": self.kemeny.denominator,
                "decimal": render(self.kemeny),
            },
            "tau": self.tau,
            "gutman": self.gutman,
            "schultz": self.schultz,
            "ratio": decimal_string(self.ratio, 4 if precision is None else precision),
        }


def index_report(n: int, family: ChainFamily) -> IndexReport:
    return IndexReport(
        n=n,
        family=family,
        kf_star=kf_star(n, family),
        kemeny=kemeny(n, family),
        tau=spanning_trees(n, family),
        gutman=gutman(n, family),
        schultz=schultz(n, family),
        ratio=gutman_kf_ratio(n, family),
    )


DEFAULT_TABLE_NS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 99)

TABLE_COLUMNS = (
    "n",
    "gut_cylinder",
    "kf_star_cylinder",
    "ratio_cylinder",
    "gut_mobius",
    "kf_star_mobius",
    "ratio_mobius",
)


def table_rows(ns=DEFAULT_TABLE_NS) -> list[dict[str, str]]:
    """Comparison table of both families as rendered strings."""
    rows = []
    for n in ns:
        row = {"n": str(n)}
        for family, suffix in (
            (ChainFamily.CYLINDER, "cylinder"),
            (ChainFamily.MOBIUS, "mobius"),
        ):
            row[f"gut_{suffix}"] = str(gutman(n, family))
            row[f"kf_star_{suffix}"] = table_number(kf_star(n, family))
            row[f"ratio_{suffix}"] = decimal_string(gutman_kf_ratio(n, family), 4)
        rows.append(row)
    return rows


def render_table(ns=DEFAULT_TABLE_NS, fmt: str = "csv") -> str:
    rows = table_rows(ns)
    if fmt == "csv":
        lines = [",".join(TABLE_COLUMNS)]
        for row in rows:
            lines.append(",".join(row[c] for c in TABLE_COLUMNS))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        import json

        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

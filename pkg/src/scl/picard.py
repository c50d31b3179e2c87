"""Exact rational calculus on a declared generator set of a Picard group.

Divisor classes on the moduli space of degree-n spectral covers with variable
genus-g base are represented as sparse vectors with ``fractions.Fraction``
coefficients over a fixed list of free generator symbols.  The stock of known
linear relations between these classes (Hodge-class expansions, the class of
the discriminant locus and its boundary/Maxwell/caustic components, the class
of covers with degenerate Abelian differential, the Prym class) is instantiated
with exact coefficients for given integers (n, g), and all consistency checks
are carried out by exact Gaussian elimination.  No floating point enters this
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InconsistentSystem, OutOfRange

__all__ = [
    "DivisorClass",
    "Relation",
    "generator_symbols",
    "known_relations",
    "express_class",
    "check_recombination",
    "prym_phi_coefficient_variants",
]


def generator_symbols(g: int) -> list[str]:
    """Ordered generator symbols of the rational Picard group model.

    ``delta`` is the total pulled-back Deligne-Mumford boundary class and the
    ``delta_j`` are its components on the space of Abelian differentials; they
    are kept as independent free symbols on purpose, so that any residual found
    by elimination is meaningful.
    """
    syms = ["lambda", "lambda_hat", "lambda_P", "phi", "psi", "delta", "delta_deg"]
    syms += [f"delta_{j}" for j in range(g // 2 + 1)]
    syms += ["PD_W", "PD_W_b", "PD_W_m", "PD_W_c", "PD_v"]
    return syms


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class DivisorClass:
    """Sparse exact-rational vector over the generator symbols.

    Attributes:
        coeffs: map generator symbol -> Fraction (zeros omitted).
        n: degree of the spectral cover (exact integer parameter).
        g: genus of the base curve.
    """

    coeffs: Mapping[str, Fraction]
    n: int
    g: int

    def __post_init__(self):
        clean = {k: _frac(v) for k, v in self.coeffs.items() if _frac(v) != 0}
        object.__setattr__(self, "coeffs", clean)

    # -- linear algebra ------------------------------------------------

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_params(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return DivisorClass(out, self.n, self.g)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + other.scale(-1)

    def scale(self, c) -> "DivisorClass":
        c = _frac(c)
        return DivisorClass({k: c * v for k, v in self.coeffs.items()}, self.n, self.g)

    def __rmul__(self, c) -> "DivisorClass":
        return self.scale(c)

    def coefficient(self, symbol: str) -> Fraction:
        return self.coeffs.get(symbol, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_params(self, other: "DivisorClass"):
        if (self.n, self.g) != (other.n, other.g):
            raise ValueError("divisor classes live on different moduli spaces")

    # -- serialization ---------------------------------------------------

    def to_strings(self) -> dict[str, str]:
        """Coefficients as exact ``p/q`` strings, suitable for reports."""
        return {k: str(v) for k, v in sorted(self.coeffs.items())}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            v = self.coeffs[k]
            parts.append(f"{v}*{k}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Relation:
    """A named identity ``left = right`` between divisor classes.

    ``space`` records which moduli space the identity lives on; relations are
    only combined when their spaces agree (classes on other spaces enter via
    the stated pullbacks).  ``source`` is a human-readable description of how
    the identity arises.
    """

    name: str
    left: DivisorClass
    right: DivisorClass
    space: str
    source: str

    @property
    def residual(self) -> DivisorClass:
        return self.left - self.right

    def vector(self) -> DivisorClass:
        """left - right as a generator vector (zero for a true identity)."""
        return self.residual


def _dc(n: int, g: int, **coeffs) -> DivisorClass:
    return DivisorClass({k: _frac(v) for k, v in coeffs.items()}, n, g)


def known_relations(n: int, g: int) -> list[Relation]:
    """Instantiate the stock of known divisor-class identities at (n, g).

    The component formulas for the boundary/Maxwell/caustic pieces of the
    discriminant locus are only available for n >= 3 and are omitted below
    that range.
    """
    if n < 2 or g < 1:
        raise OutOfRange(f"relations require n >= 2 and g >= 1, got n={n}, g={g}")
    N = n * (n - 1)
    ghat = n * n * (g - 1) + 1
    rels: list[Relation] = []

    # Hodge class on the main stratum of Abelian differentials; phi here is
    # the tautological class of that space and the delta_j its boundary classes.
    right = _dc(n, g, phi=Fraction(g - 1, 4), delta_deg=Fraction(1, 24))
    if g // 2 + 1 >= 1:
        right = right + _dc(n, g, delta_0=Fraction(1, 12))
    for j in range(1, g // 2 + 1):
        right = right + _dc(n, g, **{f"delta_{j}": Fraction(1, 8)})
    rels.append(Relation(
        name="hodge_abelian_stratum",
        left=_dc(n, g, **{"lambda": 1}),
        right=right,
        space="P-abelian-differentials(g)",
        source="Hodge class expansion on the projectivized main stratum of"
               " holomorphic 1-forms",
    ))

    # Hodge class on the moduli of N-differentials, N = n(n-1).
    rels.append(Relation(
        name="hodge_ndiff_moduli",
        left=_dc(n, g, **{"lambda": 1}),
        right=_dc(
            n, g,
            psi=Fraction((g - 1) * (2 * N + 1), 6 * N * (N + 1)),
            delta_deg=Fraction(1, 12 * N * (N + 1)),
            delta=Fraction(1, 12),
        ),
        space="P-ndifferentials(g,N)",
        source="Hodge class expansion on the projectivized moduli of"
               " holomorphic N-differentials",
    ))

    # The two tautological classes differ by the weight of the C*-action.
    rels.append(Relation(
        name="psi_phi",
        left=_dc(n, g, psi=1),
        right=_dc(n, g, phi=N),
        space="P-covers(n,g)",
        source="discriminant rescales with weight n(n-1) under the"
               " C*-action on the coefficient differentials",
    ))

    # Hodge class against the discriminant class, psi form.
    rels.append(Relation(
        name="hodge_vs_discriminant",
        left=_dc(n, g, **{"lambda": 12 * N}),
        right=_dc(
            n, g,
            PD_W=Fraction(1, n * n - n + 1),
            psi=Fraction(2 * (2 * n * n - 2 * n + 1) * (g - 1), n * n - n + 1),
            delta=N,
        ),
        space="P-covers(n,g)",
        source="divisor of the discriminant tau function",
    ))

    # Discriminant class solved out in (lambda, phi, delta).
    rels.append(Relation(
        name="discriminant_class",
        left=_dc(n, g, PD_W=Fraction(1, N)),
        right=_dc(
            n, g,
            **{"lambda": 12 * (n * n - n + 1)},
            delta=-(n * n - n + 1),
            phi=-2 * (2 * n * n - 2 * n + 1) * (g - 1),
        ),
        space="P-covers(n,g)",
        source="rearrangement of hodge_vs_discriminant under psi_phi",
    ))

    # Class of covers whose Abelian differential has a multiple zero.
    rels.append(Relation(
        name="degenerate_cover_class",
        left=_dc(n, g, PD_v=1),
        right=_dc(
            n, g,
            lambda_hat=24,
            phi=-6 * (ghat - 1),
            delta=-2 * n,
        ),
        space="P-covers(n,g)",
        source="divisor of the Abelian-differential tau function on the"
               " family of spectral covers",
    ))

    # Prym class, stored exactly as printed (note the n^2+n+1 in the phi term;
    # see prym_phi_coefficient_variants for the alternative reading).
    rels.append(Relation(
        name="prym_class",
        left=_dc(n, g, lambda_P=1),
        right=_dc(
            n, g,
            PD_v=Fraction(1, 24),
            PD_W=Fraction(-1, 12 * N * (n * n - n + 1)),
            phi=Fraction(g - 1, 3) * (Fraction(n * n) - Fraction(2 * n * n - 2 * n + 1, 2 * (n * n + n + 1))),
            delta=Fraction(n - 1, 12),
        ),
        space="P-covers(n,g)",
        source="divisor of the quotient of the cover and discriminant"
               " tau functions",
    ))

    # Splitting of the discriminant locus into its three components.
    rels.append(Relation(
        name="discriminant_splitting",
        left=_dc(n, g, PD_W=1),
        right=_dc(n, g, PD_W_b=1, PD_W_m=2, PD_W_c=3),
        space="P-covers(n,g)",
        source="multiplicities of the transversal coordinates on the three"
               " codimension-one degeneration patterns",
    ))

    if n >= 3:
        c = n * (n - 1) * (n - 2)
        rels.append(Relation(
            name="caustic_component",
            left=_dc(n, g, PD_W_c=1),
            right=_dc(n, g, **{"lambda": 12 * c}, delta=-c, phi=-4 * (g - 1) * c),
            space="P-covers(n,g)",
            source="class of the caustic component",
        ))
        m = Fraction(n * (n - 1) * (n - 2) * (n - 3), 2)
        rels.append(Relation(
            name="maxwell_component",
            left=_dc(n, g, PD_W_m=1),
            right=_dc(n, g, **{"lambda": 12 * m}, delta=-m, phi=4 * (g - 1) * m),
            space="P-covers(n,g)",
            source="class of the Maxwell component, stored as printed"
                   " (see check_recombination for the residual it leaves)",
        ))
        b = n * (n - 1)
        rels.append(Relation(
            name="boundary_component",
            left=_dc(n, g, PD_W_b=1),
            right=_dc(
                n, g,
                **{"lambda": 12 * b * (n + 1)},
                delta=-b * (n + 1),
                phi=-2 * (g - 1) * (2 * n + 1) * b,
            ),
            space="P-covers(n,g)",
            source="class of the boundary (nodal) component",
        ))
        rels.append(Relation(
            name="hodge_cover_vs_base",
            left=_dc(n, g, lambda_hat=1),
            right=_dc(
                n, g,
                **{"lambda": n * (2 * n * n - 1)},
                phi=Fraction(-n * (n - 1) * (4 * n + 1) * (g - 1), 6),
                delta=Fraction(-n * (n * n - 1), 6),
            ),
            space="P-covers(n,g)",
            source="Hodge class of the cover against the Hodge class of"
                   " the base",
        ))

    return rels


# -- exact linear algebra -----------------------------------------------------


def _to_vector(dc: DivisorClass, symbols: list[str]) -> list[Fraction]:
    return [dc.coefficient(s) for s in symbols]


def express_class(
    target: DivisorClass,
    basis: Iterable[str],
    relations: Iterable[Relation],
) -> tuple[DivisorClass | None, DivisorClass]:
    """Express ``target`` over ``basis`` modulo the given relations.

    Returns ``(expression, residual)``.  ``expression`` is a DivisorClass
    supported on ``basis`` with target = expression modulo the relation span;
    it is None when the target is obstructed, in which case ``residual`` is
    the (nonzero) canonical remainder of the target against the span of
    basis and relations.  All arithmetic is exact.
    """
    basis = list(basis)
    relations = list(relations)
    n, g = target.n, target.g
    for r in relations:
        if (r.left.n, r.left.g) != (n, g):
            raise InconsistentSystem(
                f"relation {r.name} instantiated at (n,g)=({r.left.n},{r.left.g}),"
                f" target lives at ({n},{g})"
            )
    symbols = sorted(
        set(generator_symbols(g))
        | set(target.coeffs)
        | {s for r in relations for s in (*r.left.coeffs, *r.right.coeffs)}
    )
    rel_rows = [_to_vector(r.vector(), symbols) for r in relations]
    basis_rows = [_to_vector(_dc(n, g, **{b: 1}), symbols) for b in basis]

    # Solve target = sum c_b * basis_b + sum m_r * rel_r by elimination on the
    # augmented system; track the c coefficients explicitly.
    ncols = len(symbols)
    aug = []
    for i, row in enumerate(basis_rows + rel_rows):
        tail = [Fraction(0)] * len(basis_rows)
        if i < len(basis_rows):
            tail[i] = Fraction(1)
        aug.append(list(row) + tail)
    tvec = _to_vector(target, symbols) + [Fraction(0)] * len(basis_rows)

    # Echelonize the span rows and reduce the target against them, keeping the
    # bookkeeping columns along for the ride.
    m = [list(r) for r in aug]
    nrows = len(m)
    piv_r = 0
    pivots = []
    for c in range(ncols):
        pivot = None
        for r in range(piv_r, nrows):
            if m[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[piv_r], m[pivot] = m[pivot], m[piv_r]
        pv = m[piv_r][c]
        m[piv_r] = [x / pv for x in m[piv_r]]
        for r in range(nrows):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[piv_r])]
        pivots.append((piv_r, c))
        piv_r += 1
        if piv_r == nrows:
            break

    v = list(tvec[:ncols])
    coeff_tail = [Fraction(0)] * len(basis_rows)
    for r, c in pivots:
        if v[c] != 0:
            f = v[c]
            gen_part = m[r][:ncols]
            tail_part = m[r][ncols:]
            v = [a - f * b for a, b in zip(v, gen_part)]
            coeff_tail = [a + f * b for a, b in zip(coeff_tail, tail_part)]

    residual_vec = v
    residual = DivisorClass(
        {s: x for s, x in zip(symbols, residual_vec) if x != 0}, n, g
    )
    if residual.is_zero():
        expr = DivisorClass(
            {b: c for b, c in zip(basis, coeff_tail) if c != 0}, n, g
        )
        return expr, residual
    return None, residual


def check_recombination(n: int, g: int) -> DivisorClass:
    """Residual of recombining the three discriminant components.

    Expands boundary + 2*Maxwell + 3*caustic through the component formulas,
    subtracts the direct discriminant-class formula, and returns the exact
    residual vector.  A zero residual would mean the printed component
    classes recombine to the discriminant class on the nose.
    """
    if n < 3:
        raise OutOfRange("component formulas require n >= 3")
    rels = {r.name: r for r in known_relations(n, g)}
    combo = (
        rels["boundary_component"].right
        + rels["maxwell_component"].right.scale(2)
        + rels["caustic_component"].right.scale(3)
    )
    direct = rels["discriminant_class"].right.scale(n * (n - 1))
    return combo - direct


def prym_phi_coefficient_variants(n: int, g: int) -> dict[str, Fraction]:
    """The phi coefficient of the Prym class under both printed readings.

    The printed formula carries 1/(2(n^2+n+1)) inside the phi term while the
    surrounding identities use n^2-n+1; both evaluations are exposed so the
    discrepancy can be inspected rather than silently resolved.
    """
    as_printed = Fraction(g - 1, 3) * (
        Fraction(n * n) - Fraction(2 * n * n - 2 * n + 1, 2 * (n * n + n + 1))
    )
    variant = Fraction(g - 1, 3) * (
        Fraction(n * n) - Fraction(2 * n * n - 2 * n + 1, 2 * (n * n - n + 1))
    )
    return {"as_printed": as_printed, "n2_minus_n_plus_1_variant": variant}

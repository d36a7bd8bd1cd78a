"""Order-by-order q-expansion solver for polynomial vector fields with a
scaled Euler derivation theta = lam * q * d/dq.

Instances store every line denominator-cleared, den_i(t) * theta(t_i) =
num_i(t).  Extracting the coefficient of q^n (n >= 2) is then linear in the
order-n unknowns: theta contributes lam*n*den_i(t(0)) on the diagonal and the
numerator contributes its Jacobian at the order-0 point, everything else being
lower-order data.  Orders 0 and 1 are genuinely nonlinear and are enumerated by
``solve_branch_constraints``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import kernels
from .errors import (
    DegenerateBranch,
    MirrorQuinticError,
    NoConsistentBranch,
    SingularOrderSystem,
)
from .linalg import solve_rational
from .multipoly import MultiPoly, rational_roots
from .rational import RAT_ZERO, Rational
from .series import TruncatedSeries


@dataclass(frozen=True)
class VectorFieldInstance:
    name: str
    nvars: int
    lam: object  # derivation scale, a rational
    names: tuple
    dens: tuple
    nums: tuple
    weights: tuple

    def __post_init__(self):
        for p in self.dens + self.nums:
            if p.nvars != self.nvars:
                raise ValueError("equation polynomial has wrong variable count")
        if not (len(self.dens) == len(self.nums) == self.nvars == len(self.names)):
            raise ValueError("inconsistent instance dimensions")


@dataclass(frozen=True)
class SeedData:
    """Pinned low-order coefficients {(variable, order 0|1): value} plus the
    set of variables whose order-0 value a valid branch must keep nonzero."""

    pinned: Mapping
    nonzero: frozenset = frozenset()

    def pinned_at(self, order: int, nvars: int):
        out = [None] * nvars
        for (i, k), v in self.pinned.items():
            if k == order:
                out[i] = Rational(v)
        return out


@dataclass(frozen=True)
class BranchAssignment:
    """A completed order-0/order-1 assignment.  ``order1`` entries may be None
    when the constraint system leaves them undetermined (degenerate branches);
    such branches are reported but rejected by solve_qseries."""

    order0: tuple
    order1: tuple
    free_order1: tuple = ()
    satisfies_nonzero: bool = True
    note: str = ""


@dataclass(frozen=True)
class SeriesSolution:
    instance_name: str
    names: tuple
    series: tuple

    @property
    def order(self) -> int:
        return self.series[0].order

    def __getitem__(self, key) -> TruncatedSeries:
        if isinstance(key, str):
            return self.series[self.names.index(key)]
        return self.series[key]

    def truncate(self, order: int) -> "SeriesSolution":
        return SeriesSolution(
            self.instance_name, self.names, tuple(s.truncate(order) for s in self.series)
        )


# ---------------------------------------------------------------------------
# polynomial helpers on partially-known points


def _substitute_known(p: MultiPoly, values: Sequence[Optional[Rational]]) -> MultiPoly:
    """Plug in the known coordinates, keeping unknown ones symbolic."""
    out_terms: dict = {}
    n = p.nvars
    for exps, c in p.terms.items():
        coeff = c
        new = list(exps)
        for i, e in enumerate(exps):
            if e and values[i] is not None:
                coeff = coeff * values[i] ** e
                new[i] = 0
        key = tuple(new)
        s = out_terms.get(key, RAT_ZERO) + coeff
        if s == RAT_ZERO:
            out_terms.pop(key, None)
        else:
            out_terms[key] = s
    out = MultiPoly(n)
    out.terms = out_terms
    return out


def _support_vars(p: MultiPoly):
    return sorted({i for exps in p.terms for i, e in enumerate(exps) if e})


def _univariate_coeffs(p: MultiPoly, var: int):
    coeffs = {}
    for exps, c in p.terms.items():
        coeffs[exps[var]] = coeffs.get(exps[var], RAT_ZERO) + c
    top = max(coeffs) if coeffs else 0
    return [coeffs.get(k, RAT_ZERO) for k in range(top + 1)]


def _solve_order0(instance: VectorFieldInstance, seed: SeedData):
    """Iterated univariate elimination on num_i(t(0)) = 0.

    Returns a list of (values, leftover) pairs where ``values`` may keep None
    for genuinely free order-0 slots and ``leftover`` collects equations that
    never became univariate (they still constrain the free slots).
    """
    start = seed.pinned_at(0, instance.nvars)
    branches = [(list(start), list(instance.nums))]
    done = []
    while branches:
        values, pending = branches.pop()
        progressed = True
        dead = False
        while progressed and not dead:
            progressed = False
            kept = []
            for pos, eq in enumerate(pending):
                reduced = _substitute_known(eq, values)
                sup = _support_vars(reduced)
                if not sup:
                    if not reduced.is_zero:
                        dead = True
                        break
                    progressed = True
                    continue
                if len(sup) == 1:
                    roots = rational_roots(_univariate_coeffs(reduced, sup[0]))
                    if not roots:
                        dead = True
                        break
                    progressed = True
                    for r in roots[1:]:
                        nv = list(values)
                        nv[sup[0]] = r
                        branches.append((nv, kept + pending[pos + 1 :]))
                    values[sup[0]] = roots[0]
                    continue
                kept.append(eq)
            pending = kept
        if not dead:
            done.append((values, pending))
    if not done:
        raise NoConsistentBranch("order-0 constraints have no rational solution")
    return done


class _PairPoly:
    """First-order jet (a + b q) with MultiPoly entries, multiplied mod q^2."""

    __slots__ = ("a", "b")

    def __init__(self, a: MultiPoly, b: MultiPoly):
        self.a = a
        self.b = b

    def __mul__(self, other: "_PairPoly") -> "_PairPoly":
        return _PairPoly(self.a * other.a, self.a * other.b + self.b * other.a)

    def __pow__(self, n: int) -> "_PairPoly":
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        if out is None:
            raise ValueError("zeroth jet power handled by caller")
        return out


def _order1_system(instance, values0, pinned1):
    """Build the order-1 linear system over Q[u] (u = free order-0 slots).

    Variable layout of the combined polynomial space: slots 0..nvars-1 carry
    free order-0 symbols, slots nvars..2*nvars-1 the order-1 unknowns.
    Returns (columns, rows) with rows = (A_polys, rhs_poly) per equation, the
    entries univariate... polynomial in the combined space, plus any leftover
    order-0 residual equations.
    """
    n = instance.nvars
    wide = 2 * n
    jets = []
    columns = []
    for i in range(n):
        if values0[i] is not None:
            a = MultiPoly.constant(values0[i], wide)
        else:
            a = MultiPoly.variable(i, wide)
        if pinned1[i] is not None:
            b = MultiPoly.constant(pinned1[i], wide)
        else:
            b = MultiPoly.variable(n + i, wide)
            columns.append(i)
        jets.append(_PairPoly(a, b))

    def widen_eval(p: MultiPoly) -> _PairPoly:
        acc = _PairPoly(MultiPoly.zero(wide), MultiPoly.zero(wide))
        for exps, c in p.terms.items():
            term = _PairPoly(MultiPoly.constant(c, wide), MultiPoly.zero(wide))
            for i, e in enumerate(exps):
                if e:
                    term = term * jets[i] ** e
            acc = _PairPoly(acc.a + term.a, acc.b + term.b)
        return acc

    rows = []
    residual0 = []
    for j in range(n):
        den = widen_eval(instance.dens[j])
        num = widen_eval(instance.nums[j])
        theta1 = jets[j].b * instance.lam  # coefficient of q in theta(t_j)
        e0 = -num.a
        e1 = den.a * theta1 - num.b
        if not e0.is_zero:
            residual0.append(e0)
        acols = [MultiPoly.zero(wide) for _ in columns]
        rhs = MultiPoly.zero(wide)
        for exps, c in e1.terms.items():
            xpart = [(i, exps[n + i]) for i in range(n) if exps[n + i]]
            if sum(e for _, e in xpart) > 1:
                raise MirrorQuinticError("order-1 system unexpectedly nonlinear")
            stripped = tuple(e if k < n else 0 for k, e in enumerate(exps))
            mono = MultiPoly(wide, {stripped: c})
            if xpart:
                acols[columns.index(xpart[0][0])] = (
                    acols[columns.index(xpart[0][0])] + mono
                )
            else:
                rhs = rhs - mono
        rows.append((acols, rhs))
    return columns, rows, residual0


# -- univariate polynomial rows (lists of rationals) -------------------------


def _pnorm(p):
    while p and p[-1] == RAT_ZERO:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [RAT_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == RAT_ZERO:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _pnorm(out)


def _psub(a, b):
    out = list(a) + [RAT_ZERO] * (len(b) - len(a))
    for j, y in enumerate(b):
        out[j] = out[j] - y
    return _pnorm(out)


def _peval(p, x):
    acc = RAT_ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _parametric_candidates(rows_uni):
    """Fraction-free elimination of a linear system whose entries are
    univariate polynomials in one parameter.

    Returns (pivot_polys, consistency_polys): the parameter values of interest
    are rational roots of these.  Any parameter value where the system is
    solvable either keeps all pivots nonzero (hence zeroes every consistency
    polynomial) or kills some pivot, so the union of root sets is a complete
    candidate list over Q.
    """
    rows = [list(map(list, acols)) + [list(rhs)] for acols, rhs in rows_uni]
    ncols = len(rows_uni[0][0])
    pivots, consistency = [], []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(rows)):
            p = rows[i][c]
            if p:
                if best is None or len(p) < len(rows[best][c]):
                    best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        if len(piv) > 1:
            pivots.append(piv)
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [
                    _psub(_pmul(piv, entry), _pmul(f, rows[r][k]))
                    for k, entry in enumerate(rows[i])
                ]
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][-1]:
            consistency.append(rows[i][-1])
    return pivots, consistency


def solve_branch_constraints(instance: VectorFieldInstance, seed: SeedData):
    """Enumerate all completions of the order-0/order-1 constraint system.

    Order-0 equations are solved by iterated univariate elimination with
    branching over rational roots; at most one order-0 slot may remain free,
    and its admissible values are enumerated from the parametric order-1
    linear system (see ``_parametric_candidates``).  Enumeration is over
    Q-points: the solution coefficients are rational by contract.
    """
    pinned1 = seed.pinned_at(1, instance.nvars)
    results = []
    for values0, _pending in _solve_order0(instance, seed):
        free0 = [i for i, v in enumerate(values0) if v is None]
        if len(free0) > 1:
            raise MirrorQuinticError(
                "seed leaves %d free order-0 parameters; at most one is supported"
                % len(free0)
            )
        columns, rows, residual0 = _order1_system(instance, values0, pinned1)
        if not free0:
            if any(not p.is_zero for p in residual0):
                continue
            amat = [[col.constant_value() for col in acols] for acols, _ in rows]
            rhs = [r.constant_value() for _, r in rows]
            sol, free = solve_rational(amat, rhs)
            if sol is None:
                continue
            results.append(
                _assemble_branch(instance, seed, values0, pinned1, columns, sol, free)
            )
            continue
        u = free0[0]
        rows_uni = [
            (
                [_pnorm(_univariate_coeffs(col, u)) for col in acols],
                _pnorm(_univariate_coeffs(r, u)),
            )
            for acols, r in rows
        ]
        residual_uni = [_pnorm(_univariate_coeffs(p, u)) for p in residual0]
        if residual_uni:
            candidate_polys = residual_uni
        else:
            pivots, consistency = _parametric_candidates(rows_uni)
            candidate_polys = pivots + consistency
            if not consistency:
                raise MirrorQuinticError(
                    "order-0/1 constraints leave a continuum of branches; "
                    "the seed does not pin the system"
                )
        candidates: list = []
        for p in candidate_polys:
            for root in rational_roots(p):
                if root not in candidates:
                    candidates.append(root)
        for u0 in sorted(candidates):
            values = list(values0)
            values[u] = u0
            if any(eq.evaluate(values) != RAT_ZERO for eq in instance.nums):
                continue
            amat = [
                [_peval(col, u0) for col in acols] for acols, _ in rows_uni
            ]
            rhs = [_peval(r, u0) for _, r in rows_uni]
            sol, free = solve_rational(amat, rhs)
            if sol is None:
                continue
            results.append(
                _assemble_branch(instance, seed, values, pinned1, columns, sol, free)
            )
    if not results:
        raise NoConsistentBranch("no branch satisfies the order-0/1 constraints")
    results.sort(key=lambda b: b.order0)
    return results


def _assemble_branch(instance, seed, values0, pinned1, columns, sol, free_cols):
    order1 = list(pinned1)
    free_vars = []
    for pos, var in enumerate(columns):
        if pos in free_cols:
            order1[var] = None
            free_vars.append(var)
        else:
            order1[var] = sol[pos]
    satisfied = all(values0[i] != RAT_ZERO for i in seed.nonzero)
    note = ""
    if free_vars:
        note = "order-1 coefficients %s undetermined" % (
            ", ".join(instance.names[v] for v in free_vars)
        )
    return BranchAssignment(
        order0=tuple(values0),
        order1=tuple(order1),
        free_order1=tuple(free_vars),
        satisfies_nonzero=satisfied,
        note=note,
    )


# ---------------------------------------------------------------------------
# the order-by-order recursion


class _MonomialCache:
    """Incrementally extended series values of every monomial appearing in the
    instance equations.  Monomials of total degree 1 alias the variable lists
    (which the solver mutates in place)."""

    def __init__(self, var_lists):
        self.vars = var_lists
        self.nvars = len(var_lists)
        self.values: dict = {}
        self.plan: list = []

    def register(self, expvec) -> None:
        total = sum(expvec)
        if total <= 1 or expvec in self.values:
            return
        v = max(i for i, e in enumerate(expvec) if e)
        sub = list(expvec)
        sub[v] -= 1
        sub = tuple(sub)
        self.register(sub)
        self.values[expvec] = []
        self.plan.append((expvec, sub, v))
        self.plan.sort(key=lambda item: (sum(item[0]), item[0]))

    def lookup(self, expvec):
        total = sum(expvec)
        if total == 1:
            return self.vars[max(i for i, e in enumerate(expvec) if e)]
        return self.values[expvec]

    def extend(self, n: int, final: bool) -> None:
        for expvec, sub, v in self.plan:
            val = kernels.mul_coeff(self.lookup(sub), self.vars[v], n, RAT_ZERO)
            node = self.values[expvec]
            if final and len(node) == n + 1:
                node[n] = val
            else:
                node.append(val)

    def assemble(self, p: MultiPoly, n: int):
        """Coefficient of q^n of p evaluated on the cached series."""
        zero_key = (0,) * self.nvars
        acc = RAT_ZERO
        for exps, c in p.terms.items():
            if exps == zero_key:
                if n == 0:
                    acc = acc + c
                continue
            acc = acc + c * self.lookup(exps)[n]
        return acc


def solve_qseries(
    instance: VectorFieldInstance,
    seed: SeedData,
    branch: BranchAssignment,
    order: int,
) -> SeriesSolution:
    """Extend a branch to a full series solution through ``order``.

    Raises DegenerateBranch when the branch violates the seed's nonzero
    predicate (or otherwise zeroes a cleared denominator at order 0), and
    SingularOrderSystem(n) if some per-order linear system is not uniquely
    solvable.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if branch.free_order1:
        raise DegenerateBranch(
            "branch has undetermined order-1 coefficients: " + branch.note
        )
    for i in seed.nonzero:
        if branch.order0[i] == RAT_ZERO:
            raise DegenerateBranch(
                f"branch sets {instance.names[i]} to zero at order 0"
            )
    order0 = list(branch.order0)
    den0 = [den.evaluate(order0) for den in instance.dens]
    if any(d == RAT_ZERO for d in den0):
        raise DegenerateBranch("a cleared denominator vanishes at the order-0 point")

    n_vars = instance.nvars
    lam = instance.lam
    jac = [
        [instance.nums[j].diff(i).evaluate(order0) for i in range(n_vars)]
        for j in range(n_vars)
    ]
    t_lists = [[branch.order0[i], branch.order1[i]] for i in range(n_vars)]
    cache = _MonomialCache(t_lists)
    zero_key = (0,) * n_vars
    for p in instance.nums + instance.dens:
        for exps in p.terms:
            if exps != zero_key:
                cache.register(exps)
    for n in (0, 1):
        cache.extend(n, final=False)
    den_lists = [
        [cache.assemble(instance.dens[j], n) for n in (0, 1)] for j in range(n_vars)
    ]

    def lhs_coeff(j: int, n: int):
        # (den_j * theta(t_j))_n; the m = n term vanishes since theta has no
        # constant coefficient, so den_j[n] is never needed here.
        acc = RAT_ZERO
        dl = den_lists[j]
        tl = t_lists[j]
        for m in range(0, n):
            dm = dl[m]
            if dm == RAT_ZERO:
                continue
            acc = acc + dm * (lam * (n - m)) * tl[n - m]
        return acc

    for n in range(2, order + 1):
        for tl in t_lists:
            tl.append(RAT_ZERO)
        cache.extend(n, final=False)
        rhs = [
            cache.assemble(instance.nums[j], n) - lhs_coeff(j, n)
            for j in range(n_vars)
        ]
        amat = [
            [
                (lam * n) * den0[j] - jac[j][i] if i == j else -jac[j][i]
                for i in range(n_vars)
            ]
            for j in range(n_vars)
        ]
        sol, free = solve_rational(amat, rhs)
        if sol is None or free:
            raise SingularOrderSystem(n)
        for i in range(n_vars):
            t_lists[i][n] = sol[i]
        cache.extend(n, final=True)
        for j in range(n_vars):
            den_lists[j].append(cache.assemble(instance.dens[j], n))

    return SeriesSolution(
        instance.name,
        instance.names,
        tuple(TruncatedSeries(tl[: order + 1]) for tl in t_lists),
    )


def evaluate_poly_on_series(p: MultiPoly, series_list) -> TruncatedSeries:
    """Evaluate a polynomial on truncated series, independently of the
    incremental solver machinery (used as the verification route)."""
    order = min(s.order for s in series_list)
    powers: list[dict] = [dict() for _ in range(p.nvars)]

    def var_power(i, e):
        if e not in powers[i]:
            if e == 1:
                powers[i][e] = series_list[i].truncate(order)
            else:
                powers[i][e] = var_power(i, e - 1) * series_list[i]
        return powers[i][e]

    acc = TruncatedSeries.constant(RAT_ZERO, order)
    for exps, c in p.terms.items():
        term = None
        for i, e in enumerate(exps):
            if e:
                term = var_power(i, e) if term is None else term * var_power(i, e)
        acc = acc + (TruncatedSeries.constant(c, order) if term is None else term * c)
    return acc


def residual_check(instance: VectorFieldInstance, solution: SeriesSolution):
    """Substitute the solution into den_i * theta(t_i) - num_i and report, per
    equation, the first order with a nonzero coefficient (None = clean through
    the truncation order)."""
    out = []
    for j in range(instance.nvars):
        den = evaluate_poly_on_series(instance.dens[j], solution.series)
        num = evaluate_poly_on_series(instance.nums[j], solution.series)
        resid = den * solution.series[j].theta(instance.lam) - num
        first = next(
            (n for n, c in enumerate(resid.coeffs) if c != RAT_ZERO), None
        )
        out.append(first)
    return out


def check_weighted_homogeneity(instance: VectorFieldInstance):
    """True when every equation is weighted-homogeneous with one common
    derivation degree: deg(num_i/den_i) - weights[i] must not depend on i.
    Returns (ok, derivation_degree)."""
    common = None
    for j in range(instance.nvars):
        ok_n, deg_n = instance.nums[j].is_weighted_homogeneous(instance.weights)
        ok_d, deg_d = instance.dens[j].is_weighted_homogeneous(instance.weights)
        if not (ok_n and ok_d):
            return False, None
        if deg_n is None:  # zero numerator constrains nothing
            continue
        step = deg_n - deg_d - instance.weights[j]
        if common is None:
            common = step
        elif step != common:
            return False, None
    return True, common

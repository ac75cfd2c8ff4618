"""Module-algebra and module-bialgebra actions, smash products, graphs of
crossed homomorphisms, and the derived structures they induce."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import Mat, ONE, ZERO, in_span, rat, row_space_basis
from .hopf import (
    AxiomReport,
    FinDimHopf,
    LinMap,
    Vec,
    basis_vec,
    convolve,
    grouplike_inverse,
    grouplikes,
    is_coalgebra_hom,
    is_cocommutative,
    primitives,
    unit_counit_map,
    validate_hopf,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vec,
)


class ActionData:
    """A left action of K on H, stored as one H-vector per basis pair.

    tensor[a][x] is the coordinate vector of (basis a of K) . (basis x of H).
    """

    def __init__(self, acting: FinDimHopf, target: FinDimHopf, tensor):
        self.acting = acting
        self.target = target
        if len(tensor) != acting.dim or any(len(row) != target.dim for row in tensor):
            raise ValueError("action tensor must be (dim K) x (dim H)")
        self.tensor = [[[rat(c) for c in cell] for cell in row] for row in tensor]
        for row in self.tensor:
            for cell in row:
                if len(cell) != target.dim:
                    raise ValueError("action entries must be H-coordinate vectors")

    def act_basis(self, a: int, x: int) -> Vec:
        return self.tensor[a][x]

    def act(self, a: Vec, x: Vec) -> Vec:
        out = zero_vec(self.target.dim)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cx in enumerate(x):
                if not cx:
                    continue
                out = vec_add(out, vec_scale(ca * cx, self.act_basis(i, j)))
        return out


def trivial_action(k: FinDimHopf, h: FinDimHopf) -> ActionData:
    """a . x = eps(a) x."""
    tensor = [[vec_scale(k.counit_coeff(a), basis_vec(h.dim, x)) for x in range(h.dim)]
              for a in range(k.dim)]
    return ActionData(k, h, tensor)


def adjoint_action(h: FinDimHopf) -> ActionData:
    """a . x = a1 x S(a2)."""
    tensor = []
    for a in range(h.dim):
        row = []
        for x in range(h.dim):
            acc = zero_vec(h.dim)
            for (i, j, c) in h.comult_triples(a):
                prod = h.mult_vec(h.mult_basis(i, x), h.antipode_basis(j))
                acc = vec_add(acc, vec_scale(c, prod))
            row.append(acc)
        tensor.append(row)
    return ActionData(h, h, tensor)


def validate_action(a: ActionData, require_bialgebra: bool = False) -> AxiomReport:
    """Exhaustive module-algebra (and optionally module-bialgebra) axioms."""
    k, h = a.acting, a.target
    report = AxiomReport()

    fails = [(x,) for x in range(h.dim)
             if a.act(k.unit_vec(), basis_vec(h.dim, x)) != basis_vec(h.dim, x)]
    report.record("module-unit-of-K", not fails, fails[0] if fails else None)

    fails = []
    for i in range(k.dim):
        for j in range(k.dim):
            for x in range(h.dim):
                lhs = a.act(k.mult_basis(i, j), basis_vec(h.dim, x))
                rhs = a.act(basis_vec(k.dim, i), a.act_basis(j, x))
                if lhs != rhs:
                    fails.append((i, j, x))
    report.record("module-associativity", not fails, fails[0] if fails else None)

    fails = [(i,) for i in range(k.dim)
             if a.act_basis_on_unit(i) != vec_scale(k.counit_coeff(i), h.unit_vec())]
    report.record("acts-on-unit", not fails, fails[0] if fails else None)

    fails = []
    for i in range(k.dim):
        for x in range(h.dim):
            for y in range(h.dim):
                lhs = a.act(basis_vec(k.dim, i), h.mult_basis(x, y))
                rhs = zero_vec(h.dim)
                for (a1, a2, c) in k.comult_triples(i):
                    rhs = vec_add(rhs, vec_scale(c, h.mult_vec(
                        a.act_basis(a1, x), a.act_basis(a2, y))))
                if lhs != rhs:
                    fails.append((i, x, y))
    report.record("module-algebra", not fails, fails[0] if fails else None)

    if require_bialgebra:
        fails = []
        for i in range(k.dim):
            for x in range(h.dim):
                v = a.act_basis(i, x)
                if h.counit_vec(v) != k.counit_coeff(i) * h.counit_coeff(x):
                    fails.append((i, x))
                    continue
                lhs = h.comult_vec(v)
                rhs: dict = {}
                for (a1, a2, c) in k.comult_triples(i):
                    for (x1, x2, d) in h.comult_triples(x):
                        left = a.act_basis(a1, x1)
                        right = a.act_basis(a2, x2)
                        cd = c * d
                        for p, lv in enumerate(left):
                            if not lv:
                                continue
                            for q, rv in enumerate(right):
                                if rv:
                                    key = (p, q)
                                    rhs[key] = rhs.get(key, ZERO) + cd * lv * rv
                rhs = {kk: v2 for kk, v2 in rhs.items() if v2}
                if lhs != rhs:
                    fails.append((i, x))
        report.record("module-bialgebra", not fails, fails[0] if fails else None)

    return report


# small helper used above; attach to ActionData for readability
def _act_basis_on_unit(self, i):
    return self.act(basis_vec(self.acting.dim, i), self.target.unit_vec())


ActionData.act_basis_on_unit = _act_basis_on_unit


def check_crossed_hom(pi: LinMap, action: ActionData,
                      assume_valid_action: bool = False) -> bool:
    """pi(ab) = pi(a1)(a2 . pi(b)) on all basis pairs.

    Raises with distinct messages when the action or the coalgebra
    precondition fails.
    """
    k, h = action.acting, action.target
    if pi.domain is not k or pi.codomain is not h:
        raise ValueError("map endpoints must match the action")
    if not assume_valid_action and not validate_action(action).ok:
        raise ValueError("action fails the module-algebra axioms")
    if not is_coalgebra_hom(pi):
        raise ValueError("map is not a coalgebra homomorphism")
    return crossed_hom_identity_holds(pi, action)


def crossed_hom_identity_holds(pi: LinMap, action: ActionData) -> bool:
    """The defining identity alone, with no precondition checks."""
    k, h = action.acting, action.target
    for a in range(k.dim):
        for b in range(k.dim):
            lhs = pi.apply(k.mult_basis(a, b))
            rhs = zero_vec(h.dim)
            for (a1, a2, c) in k.comult_triples(a):
                rhs = vec_add(rhs, vec_scale(c, h.mult_vec(
                    pi.image_of_basis(a1), action.act(basis_vec(k.dim, a2),
                                                      pi.image_of_basis(b)))))
            if lhs != rhs:
                return False
    return True


@dataclass
class CrossedHom:
    """A verified crossed homomorphism together with its action."""

    map: LinMap
    action: ActionData
    verified: bool = field(default=False)

    @classmethod
    def verify(cls, pi: LinMap, action: ActionData) -> "CrossedHom":
        if not check_crossed_hom(pi, action):
            raise ValueError("crossed homomorphism identity fails")
        return cls(pi, action, True)


def crossed_hom_properties(ch: CrossedHom) -> AxiomReport:
    """The convolution-calculus identities every crossed homomorphism
    satisfies: pi(1) = 1, the two antipode exchange laws, and S pi being
    the convolution inverse of pi."""
    if not ch.verified:
        raise ValueError("verify the crossed homomorphism first")
    pi, action = ch.map, ch.action
    k, h = action.acting, action.target
    report = AxiomReport()

    report.record("preserves-unit", pi.apply(k.unit_vec()) == h.unit_vec())

    s_pi = LinMap(k, h, h.antipode.mul(pi.matrix))
    fails = []
    for a in range(k.dim):
        lhs = s_pi.image_of_basis(a)
        rhs = zero_vec(h.dim)
        for (a1, a2, c) in k.comult_triples(a):
            rhs = vec_add(rhs, vec_scale(c, action.act(
                basis_vec(k.dim, a1), pi.apply(k.antipode_basis(a2)))))
        if lhs != rhs:
            fails.append((a,))
    report.record("S.pi = a1 . pi(S a2)", not fails, fails[0] if fails else None)

    fails = []
    for a in range(k.dim):
        lhs = pi.apply(k.antipode_basis(a))
        rhs = zero_vec(h.dim)
        for (a1, a2, c) in k.comult_triples(a):
            rhs = vec_add(rhs, vec_scale(c, action.act(
                k.antipode_basis(a1), s_pi.image_of_basis(a2))))
        if lhs != rhs:
            fails.append((a,))
    report.record("pi.S = S(a1) . S pi(a2)", not fails, fails[0] if fails else None)

    unit = unit_counit_map(k, h)
    left = convolve(pi, s_pi)
    right = convolve(s_pi, pi)
    report.record("convolution-inverse", left == unit and right == unit)
    return report


# -- smash products -----------------------------------------------------------

def smash_product(action: ActionData, name: str | None = None) -> FinDimHopf:
    """H # K for a module-bialgebra action of a cocommutative K.

    Basis pairs (x, a) in row-major order; multiplication
    (x # a)(y # b) = x(a1 . y) # a2 b and antipode
    S(x # a) = (S(a1) . S(x)) # S(a2).
    """
    k, h = action.acting, action.target
    if not is_cocommutative(k):
        raise ValueError("the acting Hopf algebra must be cocommutative")
    rep = validate_action(action, require_bialgebra=True)
    if not rep.ok:
        raise ValueError(f"action is not a module bialgebra: {rep.failures()}")

    nh, nk = h.dim, k.dim
    n = nh * nk

    def enc(x, a):
        return x * nk + a

    labels = [f"{h.label(x)}#{k.label(a)}" for x in range(nh) for a in range(nk)]

    mult = [[None] * n for _ in range(n)]
    for x in range(nh):
        for a in range(nk):
            for y in range(nh):
                for b in range(nk):
                    cell = zero_vec(n)
                    for (a1, a2, c) in k.comult_triples(a):
                        hpart = h.mult_vec(basis_vec(nh, x), action.act_basis(a1, y))
                        kpart = k.mult_basis(a2, b)
                        for p, hv in enumerate(hpart):
                            if not hv:
                                continue
                            for q, kv in enumerate(kpart):
                                if kv:
                                    cell[enc(p, q)] += c * hv * kv
                    mult[enc(x, a)][enc(y, b)] = cell

    unit = zero_vec(n)
    for p, hv in enumerate(h.unit_vec()):
        for q, kv in enumerate(k.unit_vec()):
            if hv and kv:
                unit[enc(p, q)] = hv * kv

    comult = []
    for x in range(nh):
        for a in range(nk):
            triples = []
            for (x1, x2, c) in h.comult_triples(x):
                for (a1, a2, d) in k.comult_triples(a):
                    triples.append((enc(x1, a1), enc(x2, a2), c * d))
            comult.append(triples)

    counit = [h.counit_coeff(x) * k.counit_coeff(a) for x in range(nh) for a in range(nk)]

    cols = []
    for x in range(nh):
        for a in range(nk):
            col = zero_vec(n)
            sx = h.antipode_basis(x)
            for (a1, a2, c) in k.comult_triples(a):
                hpart = action.act(k.antipode_basis(a1), sx)
                kpart = k.antipode_basis(a2)
                for p, hv in enumerate(hpart):
                    if not hv:
                        continue
                    for q, kv in enumerate(kpart):
                        if kv:
                            col[enc(p, q)] += c * hv * kv
            cols.append(col)
    antipode = Mat.from_cols(cols)

    corad = None
    if h.coradical_group_basis is not None and k.coradical_group_basis is not None:
        if set(h.coradical_group_basis) == set(range(nh)) and \
           set(k.coradical_group_basis) == set(range(nk)):
            corad = list(range(n))

    smash = FinDimHopf(name or f"{h.name}#{k.name}", labels, mult, unit, comult,
                       counit, antipode, coradical_group_basis=corad)
    rep = validate_hopf(smash)
    if not rep.ok:
        raise AssertionError(f"smash product failed Hopf axioms: {rep.failures()}")
    return smash


def smash_embed_h(h: FinDimHopf, k: FinDimHopf, smash: FinDimHopf) -> LinMap:
    cols = []
    for x in range(h.dim):
        col = zero_vec(smash.dim)
        for q, kv in enumerate(k.unit_vec()):
            if kv:
                col[x * k.dim + q] = kv
        cols.append(col)
    return LinMap(h, smash, Mat.from_cols(cols))


def smash_embed_k(h: FinDimHopf, k: FinDimHopf, smash: FinDimHopf) -> LinMap:
    cols = []
    for a in range(k.dim):
        col = zero_vec(smash.dim)
        for p, hv in enumerate(h.unit_vec()):
            if hv:
                col[p * k.dim + a] = hv
        cols.append(col)
    return LinMap(k, smash, Mat.from_cols(cols))


@dataclass
class GraphResult:
    basis: list  # reduced-echelon basis of Gr_pi inside H (x) K
    closed: bool  # closure under the smash multiplication
    witness: tuple | None


def graph_of(pi: LinMap, action: ActionData, smash: FinDimHopf | None = None) -> GraphResult:
    """Span of (pi (x) id) Delta over the basis of K inside H # K, with a
    subalgebra verdict.  The verdict matches the crossed-homomorphism
    identity (graph characterization)."""
    k, h = action.acting, action.target
    if not is_coalgebra_hom(pi):
        raise ValueError("map is not a coalgebra homomorphism")
    smash = smash or smash_product_algebra_only(action)
    nk = k.dim
    vectors = []
    for a in range(nk):
        vec = zero_vec(smash.dim)
        for (a1, a2, c) in k.comult_triples(a):
            img = pi.image_of_basis(a1)
            for p, hv in enumerate(img):
                if hv:
                    vec[p * nk + a2] += c * hv
        vectors.append(vec)
    basis = row_space_basis(vectors)
    closed = True
    witness = None
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            prod = smash.mult_vec(u, v)
            if not in_span(basis, prod):
                closed = False
                witness = (i, j)
                break
        if not closed:
            break
    return GraphResult(basis, closed, witness)


def smash_product_algebra_only(action: ActionData) -> FinDimHopf:
    """The smash multiplication on H (x) K without the Hopf-side
    preconditions; only the algebra structure is trustworthy.  Used for
    graph closure tests, which need nothing else."""
    k, h = action.acting, action.target
    nh, nk = h.dim, k.dim
    n = nh * nk

    def enc(x, a):
        return x * nk + a

    labels = [f"{h.label(x)}#{k.label(a)}" for x in range(nh) for a in range(nk)]
    mult = [[None] * n for _ in range(n)]
    for x in range(nh):
        for a in range(nk):
            for y in range(nh):
                for b in range(nk):
                    cell = zero_vec(n)
                    for (a1, a2, c) in k.comult_triples(a):
                        hpart = h.mult_vec(basis_vec(nh, x), action.act_basis(a1, y))
                        kpart = k.mult_basis(a2, b)
                        for p, hv in enumerate(hpart):
                            if not hv:
                                continue
                            for q, kv in enumerate(kpart):
                                if kv:
                                    cell[enc(p, q)] += c * hv * kv
                    mult[enc(x, a)][enc(y, b)] = cell
    unit = zero_vec(n)
    unit[enc(0, 0)] = ONE
    for p, hv in enumerate(h.unit_vec()):
        for q, kv in enumerate(k.unit_vec()):
            unit[enc(p, q)] = hv * kv
    comult = []
    for x in range(nh):
        for a in range(nk):
            comult.append([
                (enc(x1, a1), enc(x2, a2), c * d)
                for (x1, x2, c) in h.comult_triples(x)
                for (a1, a2, d) in k.comult_triples(a)
            ])
    counit = [h.counit_coeff(x) * k.counit_coeff(a) for x in range(nh) for a in range(nk)]
    antipode = Mat.identity(n)  # placeholder: not part of the algebra-only contract
    return FinDimHopf(f"{h.name}#{k.name}(alg)", labels, mult, unit, comult,
                      counit, antipode)


def graph_hopf_iso(ch: CrossedHom, smash: FinDimHopf | None = None):
    """Psi : K -> Gr_pi, a -> pi(a1) # a2, with inverse eps (x) id.

    Returns (Psi, inverse, report); K must be cocommutative.
    """
    pi, action = ch.map, ch.action
    k, h = action.acting, action.target
    if not is_cocommutative(k):
        raise ValueError("K must be cocommutative")
    if not ch.verified:
        raise ValueError("verify the crossed homomorphism first")
    smash = smash or smash_product(action)
    nk = k.dim
    cols = []
    for a in range(nk):
        col = zero_vec(smash.dim)
        for (a1, a2, c) in k.comult_triples(a):
            img = pi.image_of_basis(a1)
            for p, hv in enumerate(img):
                if hv:
                    col[p * nk + a2] += c * hv
        cols.append(col)
    psi = LinMap(k, smash, Mat.from_cols(cols))

    inv_cols = []
    for x in range(h.dim):
        for a in range(nk):
            inv_cols.append(vec_scale(h.counit_coeff(x), basis_vec(nk, a)))
    eps_id = LinMap(smash, k, Mat.from_cols(inv_cols))

    report = AxiomReport()
    report.record("algebra-hom", _is_algebra_hom_between(psi))
    report.record("coalgebra-hom", is_coalgebra_hom(psi))
    report.record("eps-id-section", eps_id.compose(psi).matrix == Mat.identity(nk))
    gr = graph_of(pi, action, smash=smash)
    onto = all(in_span(gr.basis, psi.image_of_basis(a)) for a in range(nk))
    report.record("lands-in-graph", onto)
    # Psi on Gr: composite the other way restricted to the graph
    back = psi.compose(eps_id)
    report.record("identity-on-graph",
                  all(back.apply(v) == v for v in gr.basis))
    report.record("commutes-with-antipode",
                  psi.matrix.mul(k.antipode) == smash.antipode.mul(psi.matrix))
    return psi, eps_id, report


def _is_algebra_hom_between(f: LinMap) -> bool:
    from .hopf import is_algebra_hom

    return is_algebra_hom(f)


# -- derived structures --------------------------------------------------------

def derived_module_structure(pi: LinMap, action: ActionData) -> AxiomReport:
    """Associativity of a ._pi x = pi(a1)(a2 . x); the verdict matches the
    crossed-homomorphism identity (module characterization)."""
    k, h = action.acting, action.target
    tensor = []
    for a in range(k.dim):
        row = []
        for x in range(h.dim):
            acc = zero_vec(h.dim)
            for (a1, a2, c) in k.comult_triples(a):
                acc = vec_add(acc, vec_scale(c, h.mult_vec(
                    pi.image_of_basis(a1), action.act_basis(a2, x))))
            row.append(acc)
        tensor.append(row)
    dot = ActionData(k, h, tensor)
    report = AxiomReport()
    fails = []
    for i in range(k.dim):
        for j in range(k.dim):
            for x in range(h.dim):
                lhs = dot.act(k.mult_basis(i, j), basis_vec(h.dim, x))
                rhs = dot.act(basis_vec(k.dim, i), dot.act_basis(j, x))
                if lhs != rhs:
                    fails.append((i, j, x))
    report.record("derived-module-associativity", not fails, fails[0] if fails else None)
    return report


def derived_action(ch: CrossedHom) -> tuple[ActionData, CrossedHom, AxiomReport]:
    """The derived module-bialgebra action a ._pi x = ad_{pi(a1)}(a2 . x)
    for cocommutative K, together with the derived crossed homomorphism
    S o pi, both verified.  The group-like and primitive restriction
    formulas are checked as part of the report."""
    pi, action = ch.map, ch.action
    k, h = action.acting, action.target
    if not is_cocommutative(k):
        raise ValueError("K must be cocommutative")
    if not ch.verified:
        raise ValueError("verify the crossed homomorphism first")

    tensor = []
    for a in range(k.dim):
        row = []
        for x in range(h.dim):
            acc = zero_vec(h.dim)
            # a1 (x) a2 (x) a3, then pi(a1) (a3 . x) S(pi(a2))
            for (a1, a2, c) in k.comult_triples(a):
                for (a11, a12, d) in k.comult_triples(a1):
                    inner = h.mult_vec(pi.image_of_basis(a11),
                                       action.act_basis(a2, x))
                    acc = vec_add(acc, vec_scale(c * d, h.mult_vec(
                        inner, h.antipode_vec(pi.image_of_basis(a12)))))
            row.append(acc)
        tensor.append(row)
    derived = ActionData(k, h, tensor)

    report = validate_action(derived, require_bialgebra=True)
    s_pi = LinMap(k, h, h.antipode.mul(pi.matrix))
    report.record("derived-crossed-hom",
                  is_coalgebra_hom(s_pi) and crossed_hom_identity_holds(s_pi, derived))

    # Restriction formulas on group-likes and primitives
    fails = []
    for gi, g in enumerate(grouplikes(k).elements):
        pg = pi.apply(g)
        pg_inv = grouplike_inverse(h, pg)
        for x in range(h.dim):
            xv = basis_vec(h.dim, x)
            lhs = derived.act(g, xv)
            rhs = h.mult_vec(h.mult_vec(pg, action.act(g, xv)), pg_inv)
            if lhs != rhs:
                fails.append((gi, x))
    report.record("grouplike-restriction", not fails, fails[0] if fails else None)

    fails = []
    for ai, a in enumerate(primitives(k)):
        pa = pi.apply(a)
        for x in range(h.dim):
            xv = basis_vec(h.dim, x)
            lhs = derived.act(a, xv)
            bracket = vec_sub(h.mult_vec(pa, xv), h.mult_vec(xv, pa))
            rhs = vec_add(bracket, action.act(a, xv))
            if lhs != rhs:
                fails.append((ai, x))
    report.record("primitive-restriction", not fails, fails[0] if fails else None)

    derived_ch = CrossedHom(s_pi, derived, verified=report.ok)
    return derived, derived_ch, report

"""Combinatorial structure theory of H^1 and its brute-force cross-checks.

Saturation: for parallel arrows ``a, b`` write ``a <= b`` when replacing one
occurrence of ``b`` by ``a`` in any relation always lands back in <Z>.  The
induced equivalence classes drive the radical, the semisimple quotient
(a product of pgl blocks) and the classification criteria below.  Every
combinatorial verdict is compared with a direct computation on structure
constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

from .cohomology import GradedH1
from .errors import DimensionMismatch, Inapplicable, InternalError
from .lie import (LieAlgebra, compare, direct_sum, is_solvable_subspace,
                  killing_radical_char0, killing_semisimple_char0, pgl, pgl_to_sl_images,
                  series_and_center, sl, witt)
from .linalg import Field, Subspace, Vector, combine
from .quiver import Path, PathBasis, is_tree, parallel_classes, qbar, substitute

TYPO_NOTE = ("abelian test: dim H1 = |Q1| - |Q0| + 1, the cycle rank of the "
             "underlying graph plus one")


# -- saturation -----------------------------------------------------------------------------


@dataclass
class SaturationOrder:
    classes: list            # parallel classes, tuples of arrow ids
    leq: dict                # (a, b) -> bool for parallel a, b
    equivalence: list        # per class: list of tuples (the ~-classes)
    components: list         # per class: list of tuples
    class_order: list        # per class: set of (i, j) with R_i <= R_j

    def le(self, a: int, b: int) -> bool:
        return self.leq[(a, b)]

    def equivalent(self, a: int, b: int) -> bool:
        return self.leq[(a, b)] and self.leq[(b, a)]

    @property
    def completely_saturated(self) -> bool:
        return all(self.leq.values())

    @property
    def symmetric(self) -> bool:
        return all(v == self.leq[(b, a)] for (a, b), v in self.leq.items())

    def all_equivalence_classes(self) -> list:
        return [s for per in self.equivalence for s in per]


def _group(items, linked) -> list:
    """Connected components of ``items`` under the symmetric predicate ``linked``."""
    out, seen = [], set()
    for x in items:
        if x in seen:
            continue
        comp, stack = [x], [x]
        seen.add(x)
        while stack:
            y = stack.pop()
            for z in items:
                if z not in seen and linked(y, z):
                    seen.add(z)
                    comp.append(z)
                    stack.append(z)
        out.append(tuple(sorted(comp)))
    return out


def saturation_order(basis: PathBasis) -> SaturationOrder:
    q = basis.quiver
    classes = parallel_classes(q)
    leq = {}
    for cls in classes:
        for a, b in product(cls, cls):
            # a <= b  iff  p^(b, a) == 0 for all p in Z
            leq[(a, b)] = all(not substitute(p, b, q.arrow_path(a), basis) for p in basis.relations)
    for cls in classes:
        for a in cls:
            if not leq[(a, a)]:
                raise InternalError("saturation relation is not reflexive")
        for a, b, c in product(cls, cls, cls):
            if leq[(a, b)] and leq[(b, c)] and not leq[(a, c)]:
                raise InternalError("saturation relation is not transitive")
    equivalence, components, orders = [], [], []
    for cls in classes:
        eq = _group(cls, lambda x, y: leq[(x, y)] and leq[(y, x)])
        equivalence.append(eq)
        components.append(_group(cls, lambda x, y: leq[(x, y)] or leq[(y, x)]))
        orders.append({(i, j) for i, r in enumerate(eq) for j, s in enumerate(eq)
                       if leq[(r[0], s[0])]})
    return SaturationOrder(classes, leq, equivalence, components, orders)


# -- helpers on H^1 ------------------------------------------------------------------------------


def _pair_vector(h1: GradedH1, a: int, b: int) -> Vector:
    q = h1.quiver
    return h1.vector({(a, q.arrow_path(b)): 1})


def in_l0(h1: GradedH1, a: int, b: int) -> bool:
    """Whether ``(a, b)`` lies in Ker psi1 (so defines an element of L_0)."""
    return h1.kernel.contains(_pair_vector(h1, a, b))


# -- basis of L_0 --------------------------------------------------------------------------------


@dataclass
class L0Basis:
    off_diagonal: list      # (a, b), a != b
    class_diagonals: list   # (a, a) for all but the last arrow of each class
    extra_diagonals: list   # independent (c, c) from the remaining arrows
    expected_extra: int

    def elements(self) -> list:
        return self.off_diagonal + self.class_diagonals + self.extra_diagonals


def l0_basis(h1: GradedH1, sat: SaturationOrder, n_components: int = 1) -> L0Basis:
    q = h1.quiver
    f = h1.field
    off = [(a, b) for cls in sat.classes for a in cls for b in cls
           if a != b and in_l0(h1, a, b)]
    diag = [(a, a) for cls in sat.classes for a in cls[:-1]]
    # (iii): greedily add remaining (c, c) independent modulo the vertex relations
    base = [h1.image.basis[i] for i in range(h1.image.dim)
            if h1.degree_of(h1.image.basis[i]) == 0]
    chosen_vecs = base + [_pair_vector(h1, a, b) for a, b in off + diag]
    span = Subspace(f, len(h1.bases.c1), chosen_vecs)
    extra = []
    for cls in sat.classes:
        c = cls[-1]
        v = _pair_vector(h1, c, c)
        if not span.contains(v):
            extra.append((c, c))
            span = Subspace(f, span.ambient, span.basis + (v,))
    expected = len(sat.classes) - q.n_vertices + n_components
    result = L0Basis(off, diag, extra, expected)
    if len(extra) != expected or len(result.elements()) != h1.piece_dim(0):
        raise DimensionMismatch(
            f"L0 basis has {len(result.elements())} elements ({len(extra)} extra), "
            f"expected dim {h1.piece_dim(0)} ({expected} extra)")
    coords = Subspace(f, h1.dim, [h1.coordinates(_pair_vector(h1, a, b)) for a, b in result.elements()])
    if coords.dim != h1.piece_dim(0):
        raise DimensionMismatch("L0 basis elements are dependent in H1")
    return result


# -- radical and semisimple quotient ---------------------------------------------------------------


def radical_generators(h1: GradedH1, sat: SaturationOrder) -> list:
    """c1 vectors spanning the radical of L_0 (before adding higher degrees)."""
    f = h1.field
    gens = []
    for per_class in sat.equivalence:
        for s in per_class:
            gens.append(combine(f, ((1, _pair_vector(h1, a, a)) for a in s)))
    for cls in sat.classes:
        for a, b in product(cls, cls):
            if a != b and in_l0(h1, a, b) and not in_l0(h1, b, a):
                gens.append(_pair_vector(h1, a, b))
    if f.characteristic == 2:
        for s in sat.all_equivalence_classes():
            if len(s) == 2:
                i1, i2 = s
                gens += [_pair_vector(h1, i1, i2), _pair_vector(h1, i2, i1), _pair_vector(h1, i1, i1)]
    return gens


def combinatorial_radical(h1: GradedH1, sat: SaturationOrder, L: LieAlgebra | None = None) -> Subspace:
    """Radical of H^1 in H^1 coordinates: Rad L_0 plus every L_i with i >= 1.

    Only valid when L_{-1} = 0.  The result is checked to be a solvable ideal.
    """
    if h1.piece_dim(-1):
        raise Inapplicable("L_{-1} != 0")
    L = L if L is not None else h1.structure_constants()
    vecs = [h1.coordinates(g) for g in radical_generators(h1, sat)]
    vecs += [{i: h1.field(1)} for i, d in enumerate(h1.rep_degrees) if d >= 1]
    rad = Subspace(h1.field, h1.dim, vecs)
    if not L.is_ideal(rad):
        raise InternalError("combinatorial radical is not an ideal")
    if not is_solvable_subspace(L, rad):
        raise InternalError("combinatorial radical is not solvable")
    return rad


def pgl_blocks(sat: SaturationOrder, field: Field) -> list:
    """The ~-classes contributing a pgl factor, as tuples of arrow ids."""
    lo = 3 if field.characteristic == 2 else 2
    return [s for s in sat.all_equivalence_classes() if len(s) >= lo]


@dataclass
class QuotientModel:
    blocks: list                 # tuples of arrow ids
    sizes: list
    model: LieAlgebra
    quotient: LieAlgebra
    images: list                 # model basis -> quotient coordinates
    matches: bool
    map_description: list = dc_field(default_factory=list)


def semisimple_quotient_model(h1: GradedH1, sat: SaturationOrder, L: LieAlgebra,
                              radical: Subspace) -> QuotientModel:
    """H^1/Rad compared with the product of pgl(|S|) over the blocks S.

    With the bracket convention used here ``(s_p, s_q) -> -e_pq`` is the
    isomorphism (``+e_pq`` would be an anti-isomorphism).
    """
    f = h1.field
    q = h1.quiver
    blocks = pgl_blocks(sat, f)
    model = direct_sum([pgl(len(s), f) for s in blocks], field=f)
    quot, qspace = L.quotient(radical)
    images, desc = [], []
    for s in blocks:
        m = len(s)
        keys = [(p, r) for p in range(m) for r in range(m) if p != r] + [(p, p) for p in range(m - 1)]
        for p, r in keys:
            v = _pair_vector(h1, s[p], s[r])
            images.append(qspace.reduce({k: -c for k, c in h1.coordinates(v).items()}))
            desc.append(f"e{p}{r} -> -({q.arrows[s[p]].name}, {q.arrows[s[r]].name})")
    ok = compare(model, quot, [{k: f(c) for k, c in im.items()} for im in images])
    return QuotientModel(blocks, [len(s) for s in blocks], model, quot, images, ok, desc)


# -- classification ------------------------------------------------------------------------------


def _verdict(value, criterion: str, brute=None, status: str = "applicable", evidence=None) -> dict:
    agree = None if value is None or brute is None else bool(value) == bool(brute)
    return {"value": value, "status": status, "criterion": criterion,
            "brute_force": brute, "agree": agree, "evidence": evidence}


def _inapplicable(reason: str, brute=None, evidence=None) -> dict:
    return _verdict(None, reason, brute, status="inapplicable", evidence=evidence)


def _truncation_length(basis: PathBasis):
    """m when Z is exactly the set of all paths of length m, else None."""
    z = basis.relations
    if not z:
        return None
    m = len(z[0])
    if any(len(p) != m for p in z):
        return None
    q = basis.quiver
    count = 0
    layer = [q.arrow_path(a) for a in range(q.n_arrows)]
    for _ in range(m - 1):
        layer = [Path(p.source, q.arrows[a].target, p.word + (a,)) for p in layer
                 for a in q.out_arrows[p.target]]
    count = len(layer)
    return m if count == len(z) else None


def _loop_power(basis: PathBasis, a: int):
    """m with a^m in Z and a^(m-1) in B, for a loop ``a``."""
    for p in basis.relations:
        if set(p.word) == {a}:
            return len(p)
    return None


@dataclass
class ClassificationReport:
    dim: int
    field: Field
    verdicts: dict
    flags: dict
    evidence: dict
    notes: list

    @property
    def brute_force_agreement(self) -> dict:
        return {k: v["agree"] for k, v in self.verdicts.items() if isinstance(v, dict) and "agree" in v}

    def value(self, name: str):
        return self.verdicts[name]["value"]

    def summary(self) -> str:
        return summary_line(self.verdicts, self.dim)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "verdicts": self.verdicts, "flags": self.flags,
                "evidence": self.evidence, "notes": list(self.notes)}


def summary_line(verdicts: dict, dim: int) -> str:
    if dim == 0:
        return "zero algebra"
    def val(k):
        v = verdicts[k]
        return v["value"] if v["value"] is not None else v["brute_force"]
    model = verdicts.get("model", {}).get("value")
    if val("simple"):
        return f"simple ≅ {model}" if model else "simple"
    if val("semisimple"):
        return f"semisimple, not simple ≅ {model}" if model else "semisimple, not simple"
    parts = []
    if val("abelian"):
        parts.append("abelian")
    elif val("nilpotent"):
        parts.append("nilpotent")
    elif val("solvable"):
        parts.append("solvable")
    else:
        parts.append("not solvable")
    parts.append("not semisimple")
    if val("reductive"):
        parts.append("reductive")
    return ", ".join(parts)


def criteria(basis: PathBasis, h1: GradedH1, L: LieAlgebra, sat: SaturationOrder) -> ClassificationReport:
    """Evaluate the combinatorial criteria on a connected quiver and cross-check them."""
    q = basis.quiver
    f = h1.field
    char = f.characteristic
    dim = h1.dim
    notes: list = []
    evidence: dict = {}
    flags: dict = {}
    ser = series_and_center(L)
    evidence["derived_series_dims"] = ser.derived_dims()
    evidence["lower_central_series_dims"] = ser.lower_central_dims()
    evidence["center_dim"] = ser.center.dim
    evidence["dims_by_degree"] = {str(k): v for k, v in h1.dims_by_degree().items()}
    higher = sum(v for d, v in h1.dims_by_degree().items() if d >= 1)

    # L_{-1}: combinatorial test on loops
    loops = [i for i, a in enumerate(q.arrows) if a.source == a.target]
    failing = []
    for a in loops:
        e = q.trivial(q.arrows[a].source)
        if not any(any(f(n) for n in substitute(p, a, e, basis).values()) for p in basis.relations):
            failing.append(q.arrows[a].name)
    lm1_zero = not failing
    implied = []
    if not loops:
        implied.append("no loop")
    if char == 0:
        implied.append("characteristic 0")
    if loops and all((m := _loop_power(basis, a)) is not None and f(m) != 0 for a in loops):
        implied.append("characteristic does not divide the loop truncation powers")
    trunc = _truncation_length(basis)
    single_loop = q.n_vertices == 1 and q.n_arrows == 1 and loops == [0]
    if trunc is not None and not single_loop:
        implied.append("truncated algebra on a quiver other than the loop")
    if trunc is not None and single_loop and f(trunc) != 0:
        implied.append("truncated loop algebra, characteristic does not divide m")
    verdicts: dict = {}
    verdicts["l_minus1_zero"] = _verdict(lm1_zero, "every loop (a, e) has some p in Z with p^(a,e) != 0",
                                         brute=h1.piece_dim(-1) == 0,
                                         evidence={"loops_without_witness": failing, "implied_by": implied})
    if implied and h1.piece_dim(-1):
        raise InternalError("a sufficient condition for L_{-1} = 0 holds but L_{-1} != 0")

    verdicts["solvable"] = None
    brute_solv = ser.is_solvable
    brute_nil = ser.is_nilpotent
    brute_ab = L.is_abelian()
    no_cycle = not q.has_oriented_cycle()
    guard_rn = no_cycle or char == 0
    flags["l_minus1_zero"] = h1.piece_dim(-1) == 0
    flags["reductivity_nilpotency_guard"] = guard_rn
    flags["loop_case"] = False
    flags["qbar_is_tree"] = is_tree(qbar(q))
    model_name = None

    loop_power = _loop_power(basis, 0) if single_loop else None
    loop_case = (single_loop and len(basis.relations) == 1 and char > 0
                 and loop_power is not None and loop_power % char == 0)

    # brute-force radical when available
    rad_bf = killing_radical_char0(L) if char == 0 else None
    if rad_bf is not None:
        evidence["killing_radical_dim"] = rad_bf.dim

    if loop_case:
        flags["loop_case"] = True
        m, p = loop_power, char
        crit = m == p and p > 2
        images = []
        witt_ok = None
        if m == p:
            W = witt(p)
            for i in range(p):
                v = h1.vector({(0, Path(0, 0, (0,) * i)): 1})
                images.append(h1.coordinates(v))
            witt_ok = compare(W, L, images)
        ideal_dims = None
        if m != p or p == 2:
            if brute_solv:
                brute_ss = False
            else:
                j = L.span({i: f(1)} for i, d in enumerate(h1.rep_degrees) if d >= p - 1)
                ok = j.dim > 0 and L.is_ideal(j) and is_solvable_subspace(L, j)
                ideal_dims = j.dim
                brute_ss = False if ok else None
        else:
            brute_ss = bool(witt_ok)
        if crit:
            model_name = "W(1,1)"
        verdicts["loop_case"] = _verdict(crit, f"loop with Z = {{a^{m}}}, char {p} | {m}: simple iff m = p > 2",
                                         brute=brute_ss,
                                         evidence={"m": m, "p": p, "witt_match": witt_ok,
                                                   "solvable_ideal_dim": ideal_dims})
        verdicts["semisimple"] = _verdict(crit, "m = p and p > 2", brute=brute_ss)
        verdicts["simple"] = _verdict(crit, "m = p and p > 2", brute=brute_ss)
        verdicts["solvable"] = _inapplicable("L_{-1} != 0; brute force only", brute=brute_solv)
        verdicts["model"] = {"value": model_name, "status": "applicable" if crit else "inapplicable"}
    else:
        verdicts["loop_case"] = _inapplicable("not the truncated loop in dividing characteristic")

    if not loop_case and h1.piece_dim(-1) == 0:
        eq_sizes = [len(s) for s in sat.all_equivalence_classes()]
        if char == 2:
            solv = all(n <= 2 for n in eq_sizes)
        else:
            solv = all(n == 1 for n in eq_sizes)
        verdicts["solvable"] = _verdict(solv, "every ~-class has one arrow (at most two in char 2)",
                                        brute=brute_solv)
        rad = combinatorial_radical(h1, sat, L)
        evidence["combinatorial_radical_dim"] = rad.dim
        if rad_bf is not None and rad != rad_bf:
            raise InternalError("combinatorial radical differs from the Killing radical")
        qm = semisimple_quotient_model(h1, sat, L, rad)
        if not qm.matches:
            raise InternalError("H1/Rad does not match the pgl product")
        qcenter = series_and_center(qm.quotient).center.dim
        evidence["quotient_center_dim"] = qcenter
        evidence["pgl_blocks"] = [[q.arrows[a].name for a in s] for s in qm.blocks]
        evidence["pgl_block_sizes"] = qm.sizes
        evidence["pgl_map"] = qm.map_description

        nontrivial = [c for c in sat.classes if len(c) >= 2]
        tree = flags["qbar_is_tree"]
        sizes = [len(c) for c in sat.classes]
        ss = (tree and bool(nontrivial) and sat.completely_saturated
              and not (char == 2 and 2 in sizes))
        sim = (tree and len(nontrivial) == 1 and f(len(nontrivial[0])) != 0
               and sat.completely_saturated)

        # brute force semisimplicity and simplicity
        if dim == 0:
            ss_bf = sim_bf = False
        elif char == 0:
            ss_bf = killing_semisimple_char0(L)
        else:
            ss_bf = rad.dim == 0 and ser.center.dim == 0 and qm.matches
        if dim and rad.dim:
            sim_bf = False
        elif dim:
            sim_bf = None
            if len(qm.blocks) > 1:
                # each block is a proper nonzero ideal
                off = 0
                block_ideal = []
                for n in qm.sizes:
                    k = n * n - 1
                    block_ideal.append(L.span(qm.images[off + i] for i in range(k)))
                    off += k
                sim_bf = not all(L.is_ideal(b) and 0 < b.dim < dim for b in block_ideal)
            elif len(qm.blocks) == 1:
                n = qm.sizes[0]
                if f(n) != 0:
                    S = sl(n, f)
                    P = pgl(n, f)
                    sim_bf = compare(P, S, pgl_to_sl_images(n, f)) and qm.matches
                    model_name = f"sl({n})"
                else:
                    d = L.bracket_span(L.full(), L.full())
                    sim_bf = not (0 < d.dim < dim and L.is_ideal(d))
                    evidence["derived_algebra_dim"] = d.dim
                    model_name = f"pgl({n})"
        if ss and not sim and len(qm.blocks) >= 1:
            model_name = " x ".join(f"pgl({n})" for n in qm.sizes)
        verdicts["semisimple"] = _verdict(
            ss, "Q-bar is a tree, some class has >= 2 arrows, <Z> completely saturated"
                + ("; no class of exactly two arrows" if char == 2 else ""), brute=ss_bf)
        verdicts["simple"] = _verdict(
            sim, "Q-bar is a tree, exactly one class of n >= 2 arrows, char does not divide n, "
                 "<Z> completely saturated", brute=sim_bf)
        verdicts["model"] = {"value": model_name if (ss or sim) else None,
                             "status": "applicable" if (ss or sim) else "inapplicable"}
        verdicts["semisimple_quotient_model"] = {
            "value": [f"pgl({n})" for n in qm.sizes], "status": "applicable",
            "matches": qm.matches}
    elif not loop_case:
        reason = "L_{-1} != 0 outside the loop case; brute force only"
        ss_bf = None
        if char == 0:
            ss_bf = dim > 0 and killing_semisimple_char0(L)
        elif brute_solv:
            ss_bf = False if dim else None
        verdicts["solvable"] = _inapplicable(reason, brute=brute_solv)
        verdicts["semisimple"] = _inapplicable(reason, brute=ss_bf)
        verdicts["simple"] = _inapplicable(reason, brute=False if ss_bf is False else None)
        verdicts["model"] = {"value": None, "status": "inapplicable"}
        verdicts["semisimple_quotient_model"] = {"value": None, "status": "inapplicable"}
    if "semisimple_quotient_model" not in verdicts:
        verdicts["semisimple_quotient_model"] = {"value": None, "status": "inapplicable"}

    # reductivity, nilpotency, commutativity
    euler = q.n_arrows - q.n_vertices + 1
    evidence["euler_characteristic_plus_one"] = euler
    if guard_rn and h1.piece_dim(-1) == 0:
        eq2 = any(len(s) == 2 for s in sat.all_equivalence_classes())
        red = higher == 0 and sat.symmetric and not (char == 2 and eq2)
        if rad_bf is not None:
            red_bf = rad_bf == ser.center
        else:
            red_bf = combinatorial_radical(h1, sat, L) == ser.center
            notes.append("reductivity cross-check uses the verified combinatorial radical (char p)")
        verdicts["reductive"] = _verdict(
            red, "sum of L_i (i >= 1) is 0 and <=_Z is symmetric on every class"
                 + ("; no ~-class of exactly two arrows" if char == 2 else ""), brute=red_bf)
        strict = any(a != b and v for (a, b), v in sat.leq.items())
        nil = higher == 0 and not strict
        by_dim = dim == euler
        if not (nil == by_dim):
            raise InternalError("nilpotency criterion (iv) disagrees with the dimension criterion")
        verdicts["nilpotent"] = _verdict(nil, "sum of L_i (i >= 1) is 0 and no parallel a != b with a <= b",
                                         brute=brute_nil)
        verdicts["abelian"] = _verdict(by_dim, "dim H1 = |Q1| - |Q0| + 1", brute=brute_ab,
                                       evidence={"dim": dim, "euler_plus_one": euler})
        notes.append(TYPO_NOTE)
        # center lemma: Z(L_0) spanned by component sums; Z(H1) inside Z(L_0)
        l0_idx = [i for i, d in enumerate(h1.rep_degrees) if d == 0]
        L0 = L.restrict(L.span({i: f(1)} for i in l0_idx))
        pos = {i: k for k, i in enumerate(l0_idx)}
        sums = []
        for comps in sat.components:
            for c in comps:
                v = h1.coordinates(combine(f, ((1, _pair_vector(h1, a, a)) for a in c)))
                sums.append({pos[i]: x for i, x in v.items()})
        lemma = L0.span(sums) == series_and_center(L0).center
        contained = all(set(v) <= set(l0_idx) for v in ser.center.basis)
        evidence["center_lemma"] = {"center_of_L0_is_component_sums": lemma,
                                    "center_inside_L0": contained}
        if not (lemma and contained):
            raise InternalError("center lemma check failed")
    else:
        reason = ("quiver has an oriented cycle in positive characteristic"
                  if not guard_rn else "L_{-1} != 0")
        red_bf = rad_bf == ser.center if rad_bf is not None else None
        verdicts["reductive"] = _inapplicable(reason, brute=red_bf)
        verdicts["nilpotent"] = _inapplicable(reason, brute=brute_nil)
        verdicts["abelian"] = _inapplicable(reason, brute=brute_ab)
    verdicts["zero"] = {"value": dim == 0, "status": "applicable"}
    return ClassificationReport(dim, f, verdicts, flags, evidence, notes)

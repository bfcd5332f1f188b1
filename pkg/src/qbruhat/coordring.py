"""Graded model of the algebra of quantum matrix coefficients.

The algebra lives here degree by degree: the piece of degree lam is the
dual of the integrable module of highest weight lam, and the product of
two dual rows is read off from the canonical embedding of the module of
the summed weight into the tensor product (replaying exact lowering
words, so no basis choices enter).  Everything downstream is blockwise
linear algebra over the exact scalars:

* orthogonals of extreme-vector closures, the graded ideal pieces
  attached to a Weyl element and a sign;
* truncated left ideals, used to check the q-commutation congruences;
* conjugation operators solving c . x = a . c past an extreme
  coefficient, their twisted eigen-decompositions, and the induced
  splitting of each weight block;
* saturation chains that divide an ideal piece by an extreme
  coefficient until the chain stabilizes, and the support extremes
  that recover the pair of Weyl elements labelling a stratum.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import build_cartan
from .exactalg import (Laurent, ONE, ZERO, Subspace, kernel,
                       reduce_against, rref, solve)
from .characters import weight_multiplicity
from .uqmodules import (build_irrep, demazure_blocks, extreme_dual_row,
                        lowering_string_to, _tensor_f)
from .weyl import WeylGroup


class SufficiencyError(RuntimeError):
    """A conjugation solve failed or was ambiguous at this degree."""


class EigenvalueError(RuntimeError):
    """A conjugation operator has spectrum outside the integer q-powers."""


class NonStratumError(RuntimeError):
    """The support extremes of an ideal piece are not singletons."""


class GradedPiece:
    """Weight-graded subspace of the dual of one module.

    Stored per weight block as canonical echelon rows over block-local
    coordinates, so equality of pieces is plain equality of data.
    """

    def __init__(self, module, blocks):
        self.module = module
        self.blocks = {wt: (rows, piv) for wt, (rows, piv) in blocks.items()
                       if rows}

    @classmethod
    def from_rows(cls, module, rows):
        per = {}
        for row in rows:
            supp = [k for k, c in enumerate(row) if c]
            if not supp:
                continue
            wt = module.weights[supp[0]]
            rng = module.weight_indices(wt)
            if supp[-1] >= rng.stop:
                raise ValueError("row spans more than one weight block")
            per.setdefault(wt, []).append(
                [row[k] for k in rng])
        blocks = {}
        for wt, rws in per.items():
            ech, piv = rref(rws)
            blocks[wt] = (ech, piv)
        return cls(module, blocks)

    @classmethod
    def zero(cls, module):
        return cls(module, {})

    @property
    def dim(self):
        return sum(len(rows) for rows, _ in self.blocks.values())

    def block_dim(self, wt):
        entry = self.blocks.get(tuple(wt))
        return len(entry[0]) if entry else 0

    def block_subspace(self, wt):
        wt = tuple(wt)
        b = len(self.module.weight_indices(wt))
        entry = self.blocks.get(wt)
        if not entry:
            return Subspace.zero(b)
        return Subspace(b, [list(r) for r in entry[0]], list(entry[1]))

    def weight_dims(self):
        """Sorted (weight, piece dim) list over the nonzero blocks."""
        return sorted((wt, len(rows))
                      for wt, (rows, _) in self.blocks.items())

    def contains_row(self, row):
        per = {}
        for k, c in enumerate(row):
            if c:
                per.setdefault(self.module.weights[k], []).append((k, c))
        for wt, items in per.items():
            rng = self.module.weight_indices(wt)
            dense = [ZERO] * len(rng)
            for k, c in items:
                dense[k - rng.start] = c
            entry = self.blocks.get(wt)
            if entry is None:
                return False
            res = reduce_against(entry[0], entry[1], dense)
            if any(res):
                return False
        return True

    def is_subpiece(self, other):
        if self.module is not other.module:
            raise ValueError("pieces live over different modules")
        for wt, (rows, _) in self.blocks.items():
            oth = other.blocks.get(wt)
            if oth is None:
                return False
            for row in rows:
                if any(reduce_against(oth[0], oth[1], row)):
                    return False
        return True

    def sum(self, other):
        if self.module is not other.module:
            raise ValueError("pieces live over different modules")
        blocks = {}
        for wt in set(self.blocks) | set(other.blocks):
            rws = []
            for src in (self, other):
                entry = src.blocks.get(wt)
                if entry:
                    rws.extend([list(r) for r in entry[0]])
            ech, piv = rref(rws)
            blocks[wt] = (ech, piv)
        return GradedPiece(self.module, blocks)

    def to_subspace(self):
        from .uqmodules import blocks_to_subspace
        return blocks_to_subspace(self.module, self.blocks)

    def __eq__(self, other):
        if not isinstance(other, GradedPiece):
            return NotImplemented
        if self.module is not other.module:
            return False
        if set(self.blocks) != set(other.blocks):
            return False
        for wt, (rows, piv) in self.blocks.items():
            orows, opiv = other.blocks[wt]
            if list(piv) != list(opiv):
                return False
            if [list(r) for r in rows] != [list(r) for r in orows]:
                return False
        return True

    def __repr__(self):
        return "GradedPiece(dim %d of %d)" % (self.dim, self.module.dim)


class SaturationResult:
    """Outcome of dividing an ideal piece by powers of an extreme
    coefficient.  The chain of preimages is kept; ``stabilized`` records
    whether the last two agree, which is the only honest certificate of
    convergence this computation offers."""

    def __init__(self, y, z, nu, bound, by, pieces):
        self.y = y
        self.z = z
        self.nu = tuple(nu)
        self.bound = bound
        self.by = by
        self.pieces = pieces
        self.stabilized = bound >= 1 and pieces[-1] == pieces[-2]

    @property
    def final(self):
        return self.pieces[-1]

    @property
    def dims(self):
        return [p.dim for p in self.pieces]

    def __repr__(self):
        return ("SaturationResult(dims %s, stabilized=%s)"
                % (self.dims, self.stabilized))


class CoordinateModel:
    """All graded data of the matrix-coefficient algebra for one type."""

    _CACHE = {}

    def __init__(self, label):
        self.datum = build_cartan(label)
        self.group = WeylGroup.build(self.datum)
        self._iota = {}
        self._pairs = {}
        self._extreme_rows = {}
        self._orth = {}
        self._pair_piece = {}
        self._left_ideal = {}
        self._saturation = {}

    @classmethod
    def get(cls, label):
        if label not in cls._CACHE:
            cls._CACHE[label] = cls(label)
        return cls._CACHE[label]

    # -- degrees and products -------------------------------------------

    def module(self, lam):
        return build_irrep(self.datum, tuple(lam))

    def iota_vectors(self, lam, mu):
        """Tensor coordinates of every basis vector of the module of
        weight lam+mu inside module(lam) ox module(mu), by replaying the
        exact lowering word of each basis vector."""
        key = (tuple(lam), tuple(mu))
        if key in self._iota:
            return self._iota[key]
        m1 = self.module(lam)
        m2 = self.module(mu)
        big = self.module(self.datum.add(lam, mu))
        vecs = [None] * big.dim
        vecs[0] = {(0, 0): ONE}
        for t in range(1, big.dim):
            p, i = big.parents[t]
            if p >= t:
                raise AssertionError("parent order violated at index %d" % t)
            vecs[t] = _tensor_f(self.datum, m1, m2, i, vecs[p])
        self._iota[key] = vecs
        return vecs

    def pair_table(self, lam, mu):
        """Sparse product rows: table[(r, s)] maps basis index t of the
        summed degree to the t-coordinate of the product of dual rows
        delta_r (degree lam) and delta_s (degree mu)."""
        key = (tuple(lam), tuple(mu))
        if key in self._pairs:
            return self._pairs[key]
        vecs = self.iota_vectors(lam, mu)
        table = {}
        for t, vec in enumerate(vecs):
            for pair, c in vec.items():
                table.setdefault(pair, {})[t] = c
        self._pairs[key] = table
        return table

    def product_cell(self, lam, r, mu, s):
        """Dense product row of two dual basis rows."""
        big = self.module(self.datum.add(lam, mu))
        out = [ZERO] * big.dim
        for t, c in self.pair_table(lam, mu).get((r, s), {}).items():
            out[t] = c
        return out

    def multiply(self, lam, rowa, mu, rowb):
        """Product of two dual rows, as a dense row of degree lam+mu."""
        big = self.module(self.datum.add(lam, mu))
        table = self.pair_table(lam, mu)
        out = [ZERO] * big.dim
        for r, a in enumerate(rowa):
            if not a:
                continue
            for s, b in enumerate(rowb):
                if not b:
                    continue
                cell = table.get((r, s))
                if not cell:
                    continue
                ab = a * b
                for t, c in cell.items():
                    out[t] = out[t] + ab * c
        return out

    def extreme_row(self, lam, w):
        key = (tuple(lam), w.idx)
        if key not in self._extreme_rows:
            self._extreme_rows[key] = extreme_dual_row(self.module(lam), w)
        return self._extreme_rows[key]

    def extreme_product_scalar(self, lam, mu, w):
        """The scalar s with c_w(lam) c_w(mu) = s . c_w(lam+mu)."""
        prod = self.multiply(lam, self.extreme_row(lam, w),
                             mu, self.extreme_row(mu, w))
        target = self.extreme_row(self.datum.add(lam, mu), w)
        j = next(k for k, c in enumerate(target) if c)
        s = prod[j] / target[j]
        check = [s * c for c in target]
        if check != prod:
            raise AssertionError("extreme product is not proportional to "
                                 "the extreme row")
        return s

    # -- graded ideal pieces --------------------------------------------

    def demazure_orth(self, w, sign, lam):
        """Dual rows vanishing on the extreme-vector closure of w with
        the given sign, block by block."""
        key = (w.idx, sign, tuple(lam))
        if key in self._orth:
            return self._orth[key]
        module = self.module(lam)
        closure = demazure_blocks(module, w, sign)
        blocks = {}
        for wt in module.block_order:
            rng = module.weight_indices(wt)
            entry = closure.get(wt)
            if entry is None:
                blocks[wt] = ([[ONE if j == i else ZERO
                                for j in range(len(rng))]
                               for i in range(len(rng))],
                              list(range(len(rng))))
                continue
            rows = entry[0]
            if len(rows) == len(rng):
                continue
            basis = kernel([list(r) for r in rows], len(rng))
            ech, piv = rref(basis)
            blocks[wt] = (ech, piv)
        piece = GradedPiece(module, blocks)
        self._orth[key] = piece
        return piece

    def pair_piece(self, y, z, lam):
        """Sum of the minus-piece at y and the plus-piece at z."""
        key = (y.idx, z.idx, tuple(lam))
        if key in self._pair_piece:
            return self._pair_piece[key]
        piece = self.demazure_orth(y, "-", lam).sum(
            self.demazure_orth(z, "+", lam))
        self._pair_piece[key] = piece
        return piece

    def left_ideal_piece(self, lam, eta, side, nu):
        """Degree nu+lam slice of the left ideal generated by all dual
        rows of degree lam whose support weight is strictly below eta
        (side '+') or strictly above it (side '-') in dominance order."""
        key = (tuple(lam), tuple(eta), side, tuple(nu))
        if key in self._left_ideal:
            return self._left_ideal[key]
        if side not in ("+", "-"):
            raise ValueError("side must be '+' or '-'")
        mlam = self.module(lam)
        mnu = self.module(nu)
        big = self.module(self.datum.add(nu, lam))
        rows = []
        for wt in mlam.block_order:
            if tuple(wt) == tuple(eta):
                continue
            if side == "+":
                if not self.datum.dominance_leq(wt, eta):
                    continue
            else:
                if not self.datum.dominance_leq(eta, wt):
                    continue
            for s in mlam.weight_indices(wt):
                for r in range(mnu.dim):
                    rows.append(self.product_cell(nu, r, lam, s))
        piece = GradedPiece.from_rows(big, rows)
        self._left_ideal[key] = piece
        return piece

    # -- q-commutation ---------------------------------------------------

    def commutation_exponent(self, lam, nu, mu, eta):
        """Integer exponent (lam, nu) - (eta, mu)."""
        e = self.datum.inner(lam, nu) - self.datum.inner(eta, mu)
        if e.denominator != 1:
            raise AssertionError("commutation exponent %s is not an integer"
                                 % (e,))
        return int(e)

    def check_commutation(self, nu, mu, lam, eta):
        """Both congruences for every pair of dual basis rows with the
        given support weights; raises with detail on the first failure."""
        mnu = self.module(nu)
        mlam = self.module(lam)
        e = self.commutation_exponent(lam, nu, mu, eta)
        qe = Laurent.q_power(e)
        jplus = self.left_ideal_piece(lam, eta, "+", nu)
        jminus = self.left_ideal_piece(lam, eta, "-", nu)
        for r in mnu.weight_indices(mu):
            for s in mlam.weight_indices(eta):
                front = self.product_cell(nu, r, lam, s)
                back = self.product_cell(lam, s, nu, r)
                diff = [a - qe * b for a, b in zip(front, back)]
                if not jplus.contains_row(diff):
                    raise AssertionError(
                        "plus congruence fails at (r=%d, s=%d), weights "
                        "mu=%s eta=%s" % (r, s, mu, eta))
                diff2 = [b - qe * a for a, b in zip(front, back)]
                if not jminus.contains_row(diff2):
                    raise AssertionError(
                        "minus congruence fails at (r=%d, s=%d), weights "
                        "mu=%s eta=%s" % (r, s, mu, eta))
        return True

    def check_extreme_relations(self, lam, nu):
        """Exact commutation past the highest and lowest extreme rows of
        degree nu: no left-ideal correction term at all."""
        datum = self.datum
        mlam = self.module(lam)
        w0 = self.group.longest
        row_e = self.extreme_row(nu, self.group.identity)
        row_w0 = self.extreme_row(nu, w0)
        w0nu = w0.act(nu)
        w0lam = w0.act(lam)
        for r in range(mlam.dim):
            mu = mlam.weights[r]
            delta = [ONE if k == r else ZERO for k in range(mlam.dim)]
            front = self.multiply(lam, delta, nu, row_e)
            back = self.multiply(nu, row_e, lam, delta)
            e = datum.inner(nu, datum.sub(mu, lam))
            if e.denominator != 1:
                raise AssertionError("highest-row exponent not integral")
            qe = Laurent.q_power(int(e))
            if front != [qe * b for b in back]:
                raise AssertionError(
                    "highest-row relation fails at index %d of degree %s"
                    % (r, lam))
            front = self.multiply(lam, delta, nu, row_w0)
            back = self.multiply(nu, row_w0, lam, delta)
            e = -datum.inner(w0nu, datum.sub(mu, w0lam))
            if e.denominator != 1:
                raise AssertionError("lowest-row exponent not integral")
            qe = Laurent.q_power(int(e))
            if front != [qe * b for b in back]:
                raise AssertionError(
                    "lowest-row relation fails at index %d of degree %s"
                    % (r, lam))
        return True

    # -- conjugation operators ------------------------------------------

    def conj_block(self, w, nu, lam, blk):
        """Matrix rows of the operator x -> solution of
        c_w(nu) . x = a . c_w(nu) on the dual block of weight blk in
        degree lam: row t lists the block coordinates of the image of
        the t-th unit row.  Raises SufficiencyError when the solve is
        inconsistent or ambiguous."""
        datum = self.datum
        mlam = self.module(lam)
        blk = tuple(blk)
        rng = mlam.weight_indices(blk)
        if not len(rng):
            return []
        ex = self.extreme_row(nu, w)
        j0 = next(k for k, c in enumerate(ex) if c)
        cex = ex[j0]
        target_wt = datum.add(w.act(nu), blk)
        big = self.module(self.datum.add(nu, lam))
        trg = big.weight_indices(target_wt)
        left_tbl = self.pair_table(nu, lam)
        right_tbl = self.pair_table(lam, nu)

        def restrict(cell):
            out = [ZERO] * len(trg)
            for t, c in cell.items():
                if not trg.start <= t < trg.stop:
                    raise AssertionError("product escapes the target block")
                out[t - trg.start] = cex * c
            return out

        lrows = [restrict(left_tbl.get((j0, u), {})) for u in rng]
        rrows = [restrict(right_tbl.get((t, j0), {})) for t in rng]
        ech, piv = rref([list(r) for r in lrows])
        if len(ech) < len(rng):
            raise SufficiencyError(
                "left multiplication by the extreme row is not injective "
                "on block %s of degree %s" % (blk, lam))
        lt = _transpose(lrows, len(trg))
        phi = []
        for t in range(len(rng)):
            x = _solve_full(lt, rrows[t])
            if x is None:
                raise SufficiencyError(
                    "conjugation solve inconsistent on block %s of degree "
                    "%s" % (blk, lam))
            phi.append(x)
        return phi

    def twisted_conj_block(self, w, i, lam, blk):
        """Conjugation by the i-th fundamental extreme row, scaled by
        q^(inner(w^-1 eta, omega_i)) where eta is the block weight
        relative to w(lam)."""
        datum = self.datum
        step = tuple(1 if j == i else 0 for j in range(datum.rank))
        phi = self.conj_block(w, step, lam, blk)
        eta = datum.sub(tuple(blk), w.act(lam))
        twist = datum.inner(w.inverse().act(eta), datum.fund(i))
        if twist.denominator != 1:
            raise AssertionError("twist exponent is not integral")
        tq = Laurent.q_power(int(twist))
        return [[tq * c for c in row] for row in phi]

    def sufficient_degree(self, w, eta, cap=6):
        """A degree k.rho whose eta-block multiplicity has stabilized,
        plus the stable multiplicity."""
        datum = self.datum
        rho = datum.rho()
        prev = None
        for k in range(1, cap + 2):
            lam = tuple(k * c for c in rho)
            m = weight_multiplicity(datum, self.group, lam,
                                    datum.add(w.act(lam), eta))
            if prev is not None and m == prev[1]:
                return prev[0], m
            prev = (lam, m)
        raise SufficiencyError("block multiplicity for eta=%s did not "
                               "stabilize below %d.rho" % (eta, cap))

    def twisted_decomposition(self, w, eta, lam=None, margin=2, cap=6):
        """Simultaneous generalized eigen-decomposition of the twisted
        conjugation operators on the eta-block.

        Returns a sorted list of (label, Subspace over block coords)
        with labels in twice the negative root lattice; the subspaces
        fill the whole block or EigenvalueError is raised.  With lam
        omitted, escalates through stabilizing degrees k.rho until the
        solves succeed."""
        datum = self.datum
        eta = tuple(eta)
        if lam is None:
            rho = datum.rho()
            last_err = None
            for k in range(1, cap + 1):
                trial = tuple(k * c for c in rho)
                try:
                    return self.twisted_decomposition(w, eta, lam=trial,
                                                      margin=margin)
                except SufficiencyError as err:
                    last_err = err
            raise SufficiencyError(
                "no degree up to %d.rho supports the eta=%s block: %s"
                % (cap, eta, last_err))
        lam = tuple(lam)
        blk = datum.add(w.act(lam), eta)
        mlam = self.module(lam)
        rng = mlam.weight_indices(blk)
        b = len(rng)
        if b == 0:
            return []
        mats = [self.twisted_conj_block(w, i, lam, blk)
                for i in range(datum.rank)]
        for i in range(datum.rank):
            for j in range(i + 1, datum.rank):
                if _row_compose(mats[i], mats[j]) != _row_compose(mats[j],
                                                                  mats[i]):
                    raise EigenvalueError(
                        "twisted conjugation operators do not commute on "
                        "block %s of degree %s" % (blk, lam))
        rc = datum.root_coords(w.inverse().act(eta))
        ranges = []
        for c in rc:
            if c.denominator != 1:
                raise AssertionError("block offset leaves the root lattice")
            lo = 2 * int(c) - margin * 2
            ranges.append(range(lo, margin * 2 + 1, 2))
        cands = [()]
        for rg in ranges:
            cands = [tup + (m,) for tup in cands for m in rg]
        found = []
        total = 0
        for coords in cands:
            mu = datum.root_to_fund(coords)
            space = None
            for i in range(datum.rank):
                e = datum.inner(mu, datum.fund(i))
                if e.denominator != 1:
                    raise AssertionError("candidate exponent not integral")
                s = Laurent.q_power(int(e))
                shifted = [[mats[i][t][u] - (s if t == u else ZERO)
                            for u in range(b)] for t in range(b)]
                power = _row_power(shifted, b)
                basis = kernel(_transpose(power, b), b)
                ech, piv = rref(basis)
                sub = Subspace(b, ech, piv)
                space = sub if space is None else space.intersect(sub)
                if not space.dim:
                    break
            if space is not None and space.dim:
                found.append((mu, space))
                total += space.dim
        if total != b:
            raise EigenvalueError(
                "eigen-decomposition covers %d of %d dimensions on block "
                "%s of degree %s; some eigenvalue is not an integer "
                "q-power in the candidate box" % (total, b, blk, lam))
        found.sort(key=lambda it: it[0])
        return found

    def lowering_split_check(self, w, eta, lam=None):
        """Cross-checks on one block: the non-central part of the
        twisted decomposition must coincide with the plus-piece of w,
        the central part must meet it trivially, and every labelled
        subspace must shift support weight by half its label under the
        full lowering strings along w.

        Returns a detail dict; raises on any failed cross-check."""
        datum = self.datum
        if lam is None:
            lam, _ = self.sufficient_degree(w, eta)
        lam = tuple(lam)
        parts = self.twisted_decomposition(w, eta, lam=lam)
        blk = datum.add(w.act(lam), tuple(eta))
        mlam = self.module(lam)
        rng = mlam.weight_indices(blk)
        b = len(rng)
        zero = datum.zero()
        qp_block = self.demazure_orth(w, "+", lam).block_subspace(blk)
        central = next((sub for mu, sub in parts if mu == zero),
                       Subspace.zero(b))
        rest = Subspace.zero(b)
        for mu, sub in parts:
            if mu != zero:
                rest = rest.sum(sub)
        if rest != qp_block:
            raise AssertionError("non-central span differs from the "
                                 "plus-piece block at %s" % (blk,))
        if central.intersect(qp_block).dim:
            raise AssertionError("central part meets the plus-piece "
                                 "at %s" % (blk,))
        if central.dim + qp_block.dim != b:
            raise AssertionError("block %s does not split" % (blk,))
        for mu, sub in parts:
            half = tuple(Fraction(c, 2) for c in datum.root_coords(mu))
            expect = datum.add(lam, datum.root_to_fund(half))
            for row in sub.rows:
                g = [ZERO] * mlam.dim
                for t, c in enumerate(row):
                    g[rng.start + t] = c
                top = lowering_string_to(mlam, g, w)
                got = mlam.row_support_weight(top)
                if tuple(got) != tuple(expect):
                    raise AssertionError(
                        "lowering string of a label-%s row lands at %s, "
                        "expected %s" % (mu, got, expect))
        return {
            "degree": lam,
            "block": blk,
            "block_dim": b,
            "central_dim": central.dim,
            "labels": [(mu, sub.dim) for mu, sub in parts],
        }

    # -- saturation ------------------------------------------------------

    def saturation(self, y, z, nu, bound, by="z"):
        """Chain of preimages of the pair piece under left multiplication
        by extreme rows of growing degree k.rho."""
        key = (y.idx, z.idx, tuple(nu), bound, by)
        if key in self._saturation:
            return self._saturation[key]
        if by not in ("y", "z"):
            raise ValueError("by must be 'y' or 'z'")
        datum = self.datum
        anchor = z if by == "z" else y
        rho = datum.rho()
        mnu = self.module(nu)
        pieces = [self.pair_piece(y, z, nu)]
        for k in range(1, bound + 1):
            krho = tuple(k * c for c in rho)
            lam_t = datum.add(nu, krho)
            target = self.pair_piece(y, z, lam_t)
            big = self.module(lam_t)
            ex = self.extreme_row(krho, anchor)
            j0 = next(t for t, c in enumerate(ex) if c)
            cex = ex[j0]
            table = self.pair_table(krho, nu)
            shift = anchor.act(krho)
            blocks = {}
            for wt in mnu.block_order:
                rng = mnu.weight_indices(wt)
                twt = datum.add(shift, wt)
                trg = big.weight_indices(twt)
                imgs = []
                for t in rng:
                    cell = table.get((j0, t), {})
                    dense = [ZERO] * len(trg)
                    for u, c in cell.items():
                        if not trg.start <= u < trg.stop:
                            raise AssertionError(
                                "product escapes the expected block")
                        dense[u - trg.start] = cex * c
                    imgs.append(dense)
                entry = target.blocks.get(twt)
                srows = [list(r) for r in entry[0]] if entry else []
                cons = kernel(srows, len(trg)) if len(trg) else []
                if not cons:
                    blocks[wt] = ([[ONE if j == i else ZERO
                                    for j in range(len(rng))]
                                   for i in range(len(rng))],
                                  list(range(len(rng))))
                    continue
                gmat = [[_dot(img, kr) for kr in cons] for img in imgs]
                basis = kernel(_transpose(gmat, len(cons)), len(rng))
                ech, piv = rref(basis)
                if ech:
                    blocks[wt] = (ech, piv)
            piece = GradedPiece(mnu, blocks)
            if not pieces[-1].is_subpiece(piece):
                raise AssertionError(
                    "saturation chain failed to grow monotonically at "
                    "step %d" % k)
            pieces.append(piece)
        result = SaturationResult(y, z, nu, bound, by, pieces)
        self._saturation[key] = result
        return result

    # -- support extremes and stratum recovery ---------------------------

    def support_extremes(self, piece):
        """Weights whose block is not fully inside the piece, with the
        dominance-maximal and dominance-minimal ones singled out."""
        module = piece.module
        support = []
        for wt in module.block_order:
            if piece.block_dim(wt) < len(module.weight_indices(wt)):
                support.append(wt)
        maximal = [wt for wt in support
                   if not any(other != wt
                              and self.datum.dominance_leq(wt, other)
                              for other in support)]
        minimal = [wt for wt in support
                   if not any(other != wt
                              and self.datum.dominance_leq(other, wt)
                              for other in support)]
        return support, sorted(maximal), sorted(minimal)

    def weight_to_element(self, nu, wt):
        """The shortest Weyl element sending nu to wt, or None."""
        for w in self.group.sorted_elements():
            if w.act(nu) == tuple(wt):
                return w
        return None

    def stratum_of(self, y, z, nu, bound=2, by="z"):
        """Recover the labelling pair from the saturated piece: the
        dominance-maximal support weight must be the single y-extreme
        and the minimal one the single z-extreme."""
        sat = self.saturation(y, z, nu, bound, by=by)
        _, maximal, minimal = self.support_extremes(sat.final)
        if len(maximal) != 1 or len(minimal) != 1:
            raise NonStratumError(
                "support extremes are not singletons: max %s, min %s"
                % (maximal, minimal))
        wy = self.weight_to_element(nu, maximal[0])
        wz = self.weight_to_element(nu, minimal[0])
        if wy is None or wz is None:
            raise NonStratumError("support extreme is not an extreme "
                                  "weight of degree %s" % (nu,))
        return wy, wz, sat


def _transpose(rows, ncols):
    return [[row[c] for row in rows] for c in range(ncols)]


def _dot(a, b):
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _solve_full(rows, rhs):
    return solve(rows, rhs)


def _row_compose(a, b):
    """Composition of row-action matrices: apply a, then b."""
    n = len(a)
    m = len(b[0]) if b else 0
    out = [[ZERO] * m for _ in range(n)]
    for t in range(n):
        for u, c in enumerate(a[t]):
            if c:
                for v in range(m):
                    if b[u][v]:
                        out[t][v] = out[t][v] + c * b[u][v]
    return out


def _row_power(mat, n):
    out = mat
    for _ in range(n - 1):
        out = _row_compose(out, mat)
    return out

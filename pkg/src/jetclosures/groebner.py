"""Buchberger engine: reduced Groebner bases, normal forms with
membership certificates, radical membership, elimination, intersection
and canonical ideal equality.

The engine is deterministic end to end: pair selection uses the normal
(degree-based) strategy with ties broken by monomial key and generator
index, and the final basis is the unique reduced Groebner basis of the
ideal for the requested order.  Pair pruning follows Gebauer-Moeller.
Resource guards (maximum S-pair degree, wall-clock timeout) raise a
typed error instead of ever returning a wrong answer.

Over the rationals the untracked path works on primitive integer
coefficient vectors with pseudo-reduction and content stripping, which
keeps the integers small without changing the ideal.  When membership
certificates are requested the engine instead tracks, through every
reduction, an expression of each basis element as a combination of the
original generators.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from math import gcd
from typing import Optional, Sequence

from .fields import QQ
from .orders import Block, MonomialOrder
from .poly import Monomial, Polynomial, RingContext, RingMismatchError


class GuardExceeded(RuntimeError):
    """A resource guard tripped; the computation is inconclusive."""

    def __init__(self, message: str, reason: str):
        super().__init__(message)
        self.reason = reason


class InternalInvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class ResourceGuard:
    """Limits for a single Groebner computation.

    ``max_pair_degree`` bounds the total degree of any S-pair lcm the
    engine is willing to process; ``timeout`` is wall-clock seconds.
    """

    max_pair_degree: int = 40
    timeout: Optional[float] = None


DEFAULT_GUARD = ResourceGuard()


class _GuardState:
    __slots__ = ("guard", "deadline")

    def __init__(self, guard: ResourceGuard):
        self.guard = guard
        self.deadline = None if guard.timeout is None else time.monotonic() + guard.timeout

    def check_degree(self, degree: int) -> None:
        if degree > self.guard.max_pair_degree:
            raise GuardExceeded(
                f"S-pair degree {degree} exceeds the bound {self.guard.max_pair_degree}",
                "degree",
            )

    def checkpoint(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise GuardExceeded(
                f"timeout of {self.guard.timeout}s exceeded", "timeout"
            )


# ---------------------------------------------------------------------------
# raw term-list representation
#
# A raw polynomial is a list of (key, exponent tuple, coefficient) triples,
# strictly descending in key, where key = order.key(exponent).  Keys are
# additive, so the key of a product is the componentwise sum.
# ---------------------------------------------------------------------------


def _vadd(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


_FIELD_BITS = 16


def _packer(arity: int):
    """Packed-integer monomials, one 16-bit field per variable.

    Divisibility of packed monomials reduces to a single big-integer
    guard-bit subtraction.  An exponent overflowing its 15-bit field
    would make packed comparisons silently wrong, so pack() refuses it;
    degree-guarded computations never get anywhere near the bound.
    """
    shifts = tuple(_FIELD_BITS * i for i in range(arity))
    limit = 1 << (_FIELD_BITS - 1)
    guard = 0
    for s in shifts:
        guard |= 1 << (s + _FIELD_BITS - 1)

    def pack(e: tuple) -> int:
        v = 0
        for x, s in zip(e, shifts):
            if x >= limit:
                raise InternalInvariantError(
                    f"exponent {x} exceeds the packed-monomial field width"
                )
            v |= x << s
        return v

    return pack, guard


def _rp_from_poly(p: Polynomial, keyf) -> list:
    terms = [(keyf(tuple(m)), tuple(m), c) for m, c in p.terms]
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def _rp_to_poly(ring: RingContext, rp: list) -> Polynomial:
    return ring.poly({Monomial(e): c for _, e, c in rp})


def _rp_sub_mul(f: list, start: int, c, mkey: tuple, mexp: tuple, g: list) -> list:
    """f[start:] - c * x^m * g for field coefficients, merging sorted lists."""
    out = []
    i, j = start, 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        kf = f[i][0]
        kg = _vadd(g[j][0], mkey)
        if kf > kg:
            out.append(f[i])
            i += 1
        elif kf < kg:
            out.append((kg, _vadd(g[j][1], mexp), -c * g[j][2]))
            j += 1
        else:
            coeff = f[i][2] - c * g[j][2]
            if coeff:
                out.append((kf, f[i][1], coeff))
            i += 1
            j += 1
    out.extend(f[i:])
    for k in range(j, ng):
        out.append((_vadd(g[k][0], mkey), _vadd(g[k][1], mexp), -c * g[k][2]))
    return out


def _rp_pseudo_combine(f: list, start: int, a: int, b: int, mkey: tuple,
                       mexp: tuple, g: list) -> list:
    """a*f[start:] - b * x^m * g over the integers."""
    out = []
    i, j = start, 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        kf = f[i][0]
        kg = _vadd(g[j][0], mkey)
        if kf > kg:
            out.append((kf, f[i][1], a * f[i][2]))
            i += 1
        elif kf < kg:
            out.append((kg, _vadd(g[j][1], mexp), -b * g[j][2]))
            j += 1
        else:
            coeff = a * f[i][2] - b * g[j][2]
            if coeff:
                out.append((kf, f[i][1], coeff))
            i += 1
            j += 1
    for k in range(i, nf):
        out.append((f[k][0], f[k][1], a * f[k][2]))
    for k in range(j, ng):
        out.append((_vadd(g[k][0], mkey), _vadd(g[k][1], mexp), -b * g[k][2]))
    return out


def _rp_scale(f: list, c) -> list:
    return [(k, e, c * v) for k, e, v in f]


def _rp_mul_term(f: list, c, mkey: tuple, mexp: tuple) -> list:
    return [(_vadd(k, mkey), _vadd(e, mexp), c * v) for k, e, v in f]


def _rp_sub(f: list, g: list) -> list:
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        if f[i][0] > g[j][0]:
            out.append(f[i])
            i += 1
        elif f[i][0] < g[j][0]:
            out.append((g[j][0], g[j][1], -g[j][2]))
            j += 1
        else:
            coeff = f[i][2] - g[j][2]
            if coeff:
                out.append((f[i][0], f[i][1], coeff))
            i += 1
            j += 1
    out.extend(f[i:])
    for k in range(j, ng):
        out.append((g[k][0], g[k][1], -g[k][2]))
    return out


def _int_content(f: list) -> int:
    c = 0
    for _, _, v in f:
        c = gcd(c, v)
        if c == 1:
            return 1
    return c or 1


def _rp_primitive(f: list) -> list:
    if not f:
        return f
    c = _int_content(f)
    if f[0][2] < 0:
        c = -c
    if c == 1:
        return f
    return [(k, e, v // c) for k, e, v in f]


def _rp_clear_denominators(f: list) -> list:
    """Scale a rational raw polynomial to primitive integer coefficients."""
    if not f:
        return f
    lcd = 1
    for _, _, c in f:
        d = c.denominator
        lcd = lcd * d // gcd(lcd, d)
    out = [(k, e, int(c * lcd)) for k, e, c in f]
    return _rp_primitive(out)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


def _nf_exact(f: list, basis: list, packed: list, pack, guard_mask: int,
              state: Optional[_GuardState] = None,
              quotients: Optional[list] = None) -> list:
    """Full normal form against a monic basis, exact field arithmetic.

    ``basis`` holds raw polynomials with leading coefficient one and
    ``packed`` their packed leading monomials.  If ``quotients`` is a
    list of dicts (one per basis element) the quotient terms are
    accumulated into it.
    """
    done: list = []
    cur = f
    start = 0
    while start < len(cur):
        if state is not None:
            state.checkpoint()
        key, exp, coeff = cur[start]
        pe = pack(exp) | guard_mask
        hit = -1
        for idx, pb in enumerate(packed):
            if (pe - pb) & guard_mask == guard_mask:
                hit = idx
                break
        if hit < 0:
            done.append(cur[start])
            start += 1
            continue
        b = basis[hit]
        mexp = _vsub(exp, b[0][1])
        mkey = _vsub(key, b[0][0])
        if quotients is not None:
            q = quotients[hit]
            total = q[mexp] + coeff if mexp in q else coeff
            if total:
                q[mexp] = total
            elif mexp in q:
                del q[mexp]
        cur = _rp_sub_mul(cur, start, coeff, mkey, mexp, b)
        start = 0
    return done


def _nf_pseudo(f: list, basis: list, packed: list, pack, guard_mask: int,
               state: Optional[_GuardState] = None) -> list:
    """Primitive normal form against a primitive integer basis.

    The result is an integer multiple of the true remainder; it is zero
    exactly when the true remainder is zero, and is returned primitive.
    Already-irreducible terms are kept with the scale they were seen at
    and rescaled once at the end.
    """
    done: list = []  # (key, exp, value, scale at extraction time)
    scale = 1
    cur = f
    start = 0
    while start < len(cur):
        if state is not None:
            state.checkpoint()
        key, exp, coeff = cur[start]
        pe = pack(exp) | guard_mask
        hit = -1
        for idx, pb in enumerate(packed):
            if (pe - pb) & guard_mask == guard_mask:
                hit = idx
                break
        if hit < 0:
            done.append((key, exp, coeff, scale))
            start += 1
            continue
        b = basis[hit]
        d = b[0][2]
        g = gcd(coeff, d)
        mult_f, mult_b = d // g, coeff // g
        mexp = _vsub(exp, b[0][1])
        mkey = _vsub(key, b[0][0])
        scale *= mult_f
        cur = _rp_pseudo_combine(cur, start, mult_f, mult_b, mkey, mexp, b)
        start = 0
    if not done:
        return []
    out = [(k, e, v * (scale // s)) for k, e, v, s in done]
    return _rp_primitive(out)


# ---------------------------------------------------------------------------
# Buchberger driver
# ---------------------------------------------------------------------------


class _Engine:
    """One Groebner run: holds the basis, the pair queue and the mode."""

    def __init__(self, ring: RingContext, order: MonomialOrder,
                 generators: Sequence[Polynomial], guard: ResourceGuard,
                 tracked: bool):
        self.ring = ring
        self.order = order
        self.keyf = order.key
        self.state = _GuardState(guard)
        self.tracked = tracked
        self.pseudo = (ring.field == QQ) and not tracked
        if ring.field == QQ:
            self.inv = lambda c: Fraction(1) / c
        else:
            self.inv = lambda c: c.inverse()
        self.pack, self.pguard = _packer(ring.arity)
        self.basis: list = []       # raw polynomials
        self.lm_packed: list = []   # packed leading monomials, parallel to basis
        self.rows: list = []        # cofactor rows, tracked mode only
        self.pairs: list = []       # heap of (deg, lcm key, j, i, lcm exp)
        self.pair_live: dict = {}   # live (i, j) -> packed lcm, i < j
        self.ngens = len(generators)
        self.generators = list(generators)

    # -- normalization of one raw polynomial --------------------------------

    def _normalize(self, rp: list, row: Optional[list]):
        if not rp:
            return None
        if self.pseudo:
            return _rp_primitive(rp), None
        lc = rp[0][2]
        if lc != self.ring.field.one:
            scale = self.inv(lc)
            rp = _rp_scale(rp, scale)
            if row is not None:
                row = [_rp_scale(r, scale) for r in row]
        return rp, row

    def _reduce(self, rp: list, row: Optional[list]):
        """Full normal form of rp against the current basis, mirroring rows."""
        if self.pseudo:
            return _nf_pseudo(rp, self.basis, self.lm_packed, self.pack,
                              self.pguard, self.state), None
        if not self.tracked:
            return _nf_exact(rp, self.basis, self.lm_packed, self.pack,
                             self.pguard, self.state), None
        quotients = [dict() for _ in self.basis]
        rem = _nf_exact(rp, self.basis, self.lm_packed, self.pack,
                        self.pguard, self.state, quotients)
        if row is None:
            row = [[] for _ in range(self.ngens)]
        for b_idx, q in enumerate(quotients):
            for mexp, coeff in q.items():
                if not coeff:
                    continue
                mkey = self.keyf(mexp)
                for g_idx in range(self.ngens):
                    piece = self.rows[b_idx][g_idx]
                    if piece:
                        row[g_idx] = _rp_sub(row[g_idx], _rp_mul_term(piece, coeff, mkey, mexp))
        return rem, row

    # -- pair bookkeeping ----------------------------------------------------

    def _push_pair(self, i: int, j: int, lcm_exp: tuple, packed_lcm: int) -> None:
        deg = sum(lcm_exp)
        heappush(self.pairs, (deg, self.keyf(lcm_exp), j, i, lcm_exp))
        self.pair_live[(i, j)] = packed_lcm

    def _update_pairs(self, t: int) -> None:
        """Gebauer-Moeller update after basis element t was appended."""
        lm_t = self.basis[t][0][1]
        pt = self.lm_packed[t]
        guard_mask = self.pguard

        # group candidate pairs (i, t) by their lcm
        groups: dict = {}
        for i in range(t):
            lcm_exp = tuple(max(a, b) for a, b in zip(self.basis[i][0][1], lm_t))
            groups.setdefault(lcm_exp, []).append(i)
        packed = {L: self.pack(L) for L in groups}

        # drop each lcm that is a proper multiple of another candidate lcm
        lcm_list = list(groups)
        survivors = []
        for L in lcm_list:
            pL = packed[L] | guard_mask
            dominated = False
            for K in lcm_list:
                pK = packed[K]
                if pK != packed[L] and (pL - pK) & guard_mask == guard_mask:
                    dominated = True
                    break
            if not dominated:
                survivors.append(L)

        # one representative per surviving lcm, unless coprime leading terms
        for L in sorted(survivors):
            members = groups[L]
            coprime = any(
                all(min(a, b) == 0 for a, b in zip(self.basis[i][0][1], lm_t))
                for i in members
            )
            if coprime:
                continue
            self._push_pair(min(members), t, L, packed[L])

        # prune old pairs strictly dominated by the new leading monomial
        lcm_with_t = {}
        for i in range(t):
            lcm_with_t[i] = self.pack(
                tuple(max(a, b) for a, b in zip(self.basis[i][0][1], lm_t))
            )
        stale = []
        for (i, j), pij in self.pair_live.items():
            if j == t:
                continue
            if (
                ((pij | guard_mask) - pt) & guard_mask == guard_mask
                and lcm_with_t[i] != pij
                and lcm_with_t[j] != pij
            ):
                stale.append((i, j))
        for pair in stale:
            del self.pair_live[pair]

    def _append(self, rp: list, row: Optional[list]) -> None:
        self.basis.append(rp)
        self.lm_packed.append(self.pack(rp[0][1]))
        if self.tracked:
            self.rows.append(row if row is not None else [[] for _ in range(self.ngens)])
        self._update_pairs(len(self.basis) - 1)

    # -- main loop -----------------------------------------------------------

    def run(self):
        zero_exp = tuple([0] * self.ring.arity)
        unit_key = self.keyf(zero_exp)
        for idx, g in enumerate(self.generators):
            rp = _rp_from_poly(g, self.keyf)
            if self.pseudo:
                rp = _rp_clear_denominators(rp)
            if not rp:
                continue
            row = None
            if self.tracked:
                row = [[] for _ in range(self.ngens)]
                row[idx] = [(unit_key, zero_exp, self.ring.field.one)]
            rem, row = self._reduce(rp, row)
            normalized = self._normalize(rem, row)
            if normalized is None:
                continue
            self._append(*normalized)

        while self.pair_live:
            self.state.checkpoint()
            deg, _, j, i, lcm_exp = heappop(self.pairs)
            if (i, j) not in self.pair_live:
                continue
            del self.pair_live[(i, j)]
            self.state.check_degree(deg)
            spair, row = self._spoly(i, j, lcm_exp)
            rem, row = self._reduce(spair, row)
            normalized = self._normalize(rem, row)
            if normalized is None:
                continue
            self._append(*normalized)

        return self._reduced_basis()

    def _spoly(self, i: int, j: int, lcm_exp: tuple):
        gi, gj = self.basis[i], self.basis[j]
        mi = _vsub(lcm_exp, gi[0][1])
        mj = _vsub(lcm_exp, gj[0][1])
        ki, kj = self.keyf(mi), self.keyf(mj)
        if self.pseudo:
            ci, cj = gi[0][2], gj[0][2]
            g = gcd(ci, cj)
            a, b = cj // g, ci // g
            left = _rp_mul_term(gi, a, ki, mi)
            spair = _rp_sub(left, _rp_mul_term(gj, b, kj, mj))
            return spair, None
        one = self.ring.field.one
        left = _rp_mul_term(gi, one, ki, mi)
        spair = _rp_sub(left, _rp_mul_term(gj, one, kj, mj))
        row = None
        if self.tracked:
            row = []
            for g_idx in range(self.ngens):
                a = _rp_mul_term(self.rows[i][g_idx], one, ki, mi) if self.rows[i][g_idx] else []
                b = _rp_mul_term(self.rows[j][g_idx], one, kj, mj) if self.rows[j][g_idx] else []
                row.append(_rp_sub(a, b))
        return spair, row

    # -- reduction to the unique reduced basis -------------------------------

    def _reduced_basis(self):
        guard_mask = self.pguard
        order_pairs = sorted(range(len(self.basis)), key=lambda i: self.basis[i][0][0])
        kept: list = []
        for idx in order_pairs:
            plm = self.lm_packed[idx] | guard_mask
            if any((plm - self.lm_packed[k]) & guard_mask == guard_mask for k in kept):
                continue
            kept.append(idx)

        final = []
        final_rows = []
        for pos, idx in enumerate(kept):
            others = [self.basis[k] for k in kept if k != idx]
            others_packed = [self.lm_packed[k] for k in kept if k != idx]
            if self.pseudo:
                rem = _nf_pseudo(self.basis[idx], others, others_packed,
                                 self.pack, guard_mask, self.state)
            elif not self.tracked:
                rem = _nf_exact(self.basis[idx], others, others_packed,
                                self.pack, guard_mask, self.state)
            else:
                # mirror the tail reduction onto the cofactor row
                quotients = [dict() for _ in others]
                rem = _nf_exact(self.basis[idx], others, others_packed,
                                self.pack, guard_mask, self.state, quotients)
                row = [list(r) for r in self.rows[idx]]
                other_indices = [k for k in kept if k != idx]
                for b_pos, q in enumerate(quotients):
                    b_idx = other_indices[b_pos]
                    for mexp, coeff in q.items():
                        mkey = self.keyf(mexp)
                        for g_idx in range(self.ngens):
                            piece = self.rows[b_idx][g_idx]
                            if piece:
                                row[g_idx] = _rp_sub(
                                    row[g_idx], _rp_mul_term(piece, coeff, mkey, mexp)
                                )
                final_rows.append(row)
            if not rem:
                raise InternalInvariantError("a minimal basis element tail-reduced to zero")
            final.append(rem)

        # monicize (pseudo mode carried integer multiples until now)
        monic = []
        monic_rows = []
        for pos, rp in enumerate(final):
            lc = rp[0][2]
            if self.pseudo:
                rp = [(k, e, Fraction(v, lc)) for k, e, v in rp]
            elif lc != self.ring.field.one:
                scale = self.inv(lc)
                rp = _rp_scale(rp, scale)
                if self.tracked:
                    final_rows[pos] = [_rp_scale(r, scale) for r in final_rows[pos]]
            monic.append(rp)
            if self.tracked:
                monic_rows.append(final_rows[pos])

        paired = sorted(range(len(monic)), key=lambda i: monic[i][0][0])
        basis = [monic[i] for i in paired]
        rows = [monic_rows[i] for i in paired] if self.tracked else None
        return basis, rows


# ---------------------------------------------------------------------------
# public ideal interface
# ---------------------------------------------------------------------------


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    def __init__(self, ring: RingContext, generators: Sequence[Polynomial]):
        gens = []
        seen = set()
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator does not belong to the ideal's ring")
            if g.is_zero():
                continue
            marker = g.terms
            if marker in seen:
                continue
            seen.add(marker)
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._basis_cache: dict = {}
        self._tracked_cache: dict = {}

    def __repr__(self) -> str:
        from .printer import format_generators

        return f"Ideal({format_generators(self.generators)})"


@dataclass(frozen=True)
class MembershipCertificate:
    """An identity target = sum of cofactor * generator, checkable by hand."""

    ideal: Ideal
    target: Polynomial
    cofactors: tuple  # of (Polynomial, generator index)


def verify_certificate(cert: MembershipCertificate) -> bool:
    """Re-expand the certificate with plain polynomial arithmetic."""
    total = cert.target.ring.zero()
    gens = cert.ideal.generators
    for cof, idx in cert.cofactors:
        if idx < 0 or idx >= len(gens):
            return False
        total = total + cof * gens[idx]
    return total == cert.target


class MembershipResult:
    """Boolean membership verdict carrying its certificate when true."""

    __slots__ = ("member", "certificate", "remainder")

    def __init__(self, member: bool, certificate: Optional[MembershipCertificate],
                 remainder: Polynomial):
        self.member = member
        self.certificate = certificate
        self.remainder = remainder

    def __bool__(self) -> bool:
        return self.member

    def __repr__(self) -> str:
        return f"MembershipResult({self.member})"


def groebner_basis(ideal: Ideal, order: Optional[MonomialOrder] = None,
                   guard: ResourceGuard = DEFAULT_GUARD) -> tuple:
    """The unique reduced Groebner basis of the ideal for the order."""
    order = order if order is not None else ideal.ring.order
    key = order.cache_key()
    cached = ideal._basis_cache.get(key)
    if cached is not None:
        return cached
    tracked = ideal._tracked_cache.get(key)
    if tracked is not None:
        basis = tuple(p for p, _ in tracked)
        ideal._basis_cache[key] = basis
        return basis
    engine = _Engine(ideal.ring, order, ideal.generators, guard, tracked=False)
    raw, _ = engine.run()
    basis = tuple(_rp_to_poly(ideal.ring, rp) for rp in raw)
    ideal._basis_cache[key] = basis
    return basis


def _tracked_basis(ideal: Ideal, order: Optional[MonomialOrder] = None,
                   guard: ResourceGuard = DEFAULT_GUARD) -> tuple:
    order = order if order is not None else ideal.ring.order
    key = order.cache_key()
    cached = ideal._tracked_cache.get(key)
    if cached is not None:
        return cached
    engine = _Engine(ideal.ring, order, ideal.generators, guard, tracked=True)
    raw, rows = engine.run()
    entries = []
    for rp, row in zip(raw, rows or []):
        cofs = tuple(_rp_to_poly(ideal.ring, r) for r in row)
        entries.append((_rp_to_poly(ideal.ring, rp), cofs))
    result = tuple(entries)
    ideal._tracked_cache[key] = result
    ideal._basis_cache.setdefault(key, tuple(p for p, _ in result))
    return result


def normal_form(f: Polynomial, ideal: Ideal, order: Optional[MonomialOrder] = None,
                guard: ResourceGuard = DEFAULT_GUARD):
    """Fully reduced remainder of f and a certificate for f - remainder."""
    if f.ring != ideal.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    order = order if order is not None else ideal.ring.order
    tracked = _tracked_basis(ideal, order, guard)
    keyf = order.key
    pack, guard_mask = _packer(ideal.ring.arity)
    basis = [_rp_from_poly(p, keyf) for p, _ in tracked]
    packed = [pack(rp[0][1]) for rp in basis]
    quotients = [dict() for _ in basis]
    state = _GuardState(guard)
    rem_raw = _nf_exact(_rp_from_poly(f, keyf), basis, packed, pack, guard_mask,
                        state, quotients)
    remainder = _rp_to_poly(ideal.ring, rem_raw)

    ngens = len(ideal.generators)
    acc = [ideal.ring.zero() for _ in range(ngens)]
    for b_idx, q in enumerate(quotients):
        if not q:
            continue
        q_poly = ideal.ring.poly({Monomial(e): c for e, c in q.items()})
        for g_idx, cof in enumerate(tracked[b_idx][1]):
            if not cof.is_zero():
                acc[g_idx] = acc[g_idx] + q_poly * cof
    cofactors = tuple((c, i) for i, c in enumerate(acc) if not c.is_zero())
    cert = MembershipCertificate(ideal, f - remainder, cofactors)
    return remainder, cert


def _field_inv(ring: RingContext):
    if ring.field == QQ:
        return lambda c: Fraction(1) / c
    return lambda c: c.inverse()


def ideal_member(f: Polynomial, ideal: Ideal,
                 guard: ResourceGuard = DEFAULT_GUARD) -> MembershipResult:
    """Exact ideal membership; a positive answer carries its certificate."""
    remainder, cert = normal_form(f, ideal, guard=guard)
    if remainder.is_zero():
        return MembershipResult(True, cert, remainder)
    return MembershipResult(False, None, remainder)


class RadicalMembership:
    """Verdict of a radical membership test, optionally with an exponent."""

    __slots__ = ("member", "exponent", "power_certificate")

    def __init__(self, member: bool, exponent: Optional[int],
                 power_certificate: Optional[MembershipCertificate]):
        self.member = member
        self.exponent = exponent
        self.power_certificate = power_certificate

    def __bool__(self) -> bool:
        return self.member


def radical_member(f: Polynomial, ideal: Ideal, *, find_exponent: bool = False,
                   max_exponent: int = 64,
                   guard: ResourceGuard = DEFAULT_GUARD) -> RadicalMembership:
    """Test f in rad(I) by adjoining w and asking whether 1 in I + (1 - w*f).

    With ``find_exponent`` the least power-of-two exponent e <= max_exponent
    with f^e in I is also located by repeated squaring; its membership
    certificate is attached.
    """
    if f.ring != ideal.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    ring = ideal.ring
    w = ring.fresh_name("w")
    big = ring.extend([w])
    gens = [g.map_into(big) for g in ideal.generators]
    gens.append(big.one() - big.variable(w) * f.map_into(big))
    basis = groebner_basis(Ideal(big, gens), guard=guard)
    member = len(basis) == 1 and basis[0].total_degree() == 0
    if not member or not find_exponent:
        return RadicalMembership(member, None, None)
    e = 1
    power = f
    while e <= max_exponent:
        res = ideal_member(power, ideal, guard=guard)
        if res:
            return RadicalMembership(True, e, res.certificate)
        power = power * power
        e *= 2
    return RadicalMembership(True, None, None)


def eliminate(ideal: Ideal, keep: Sequence[str],
              guard: ResourceGuard = DEFAULT_GUARD) -> Ideal:
    """Generators of the intersection with the subring on ``keep``.

    Computed with a block order whose elimination block is the
    complement of ``keep``; the returned ideal lives in the same ring
    and its generators only involve the kept variables.
    """
    ring = ideal.ring
    keep_set = set(keep)
    unknown = keep_set - set(ring.variables)
    if unknown:
        raise KeyError(f"unknown variables in keep set: {sorted(unknown)}")
    elim_positions = tuple(i for i, v in enumerate(ring.variables) if v not in keep_set)
    if not elim_positions:
        return Ideal(ring, groebner_basis(ideal, guard=guard))
    order = Block(ring.arity, elim_positions)
    basis = groebner_basis(ideal, order, guard=guard)
    elim_set = set(elim_positions)
    kept = []
    for p in basis:
        if all(
            all(e == 0 for i, e in enumerate(m) if i in elim_set)
            for m, _ in p.terms
        ):
            kept.append(p)
    return Ideal(ring, kept)


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    return Ideal(a.ring, a.generators + b.generators)


def ideal_intersect(a: Ideal, b: Ideal, guard: ResourceGuard = DEFAULT_GUARD) -> Ideal:
    """a intersect b via elimination of one fresh scalar variable."""
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    ring = a.ring
    w = ring.fresh_name("w")
    big = ring.extend([w])
    wp = big.variable(w)
    one_minus = big.one() - wp
    gens = [wp * g.map_into(big) for g in a.generators]
    gens += [one_minus * h.map_into(big) for h in b.generators]
    elim = eliminate(Ideal(big, gens), ring.variables, guard=guard)
    return Ideal(ring, [g.map_into(ring) for g in elim.generators])


def ideal_equal(a: Ideal, b: Ideal, guard: ResourceGuard = DEFAULT_GUARD) -> bool:
    """Exact equality through reduced bases under the shared ring order."""
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    return groebner_basis(a, guard=guard) == groebner_basis(b, guard=guard)


def ideal_contains(a: Ideal, b: Ideal, guard: ResourceGuard = DEFAULT_GUARD) -> bool:
    """True when every generator of b lies in a."""
    return all(ideal_member(g, a, guard=guard) for g in b.generators)


def is_unit_ideal(ideal: Ideal, guard: ResourceGuard = DEFAULT_GUARD) -> bool:
    basis = groebner_basis(ideal, guard=guard)
    return len(basis) == 1 and basis[0].total_degree() == 0

"""Modified Macdonald, transformed Hall-Littlewood, Kostka-Foulkes and Green
polynomials, plus the genus-g hook functions.

Parameters are positional: the first generator plays q (or z), the second t
(or w).  Tables are Schur expansions {nu: RatFun} and are cached in memory
and, optionally, on disk.
"""
from __future__ import annotations

import json
import logging
import os
import threading
from functools import lru_cache
from pathlib import Path

from .combinat import Partition, TypeT, partitions_of, sym_char, z_part
from .errors import SizeMismatch
from .exact import ONE, QT, ZERO, RatFun, as_polynomial, parse_laurent
from .symfun import SymFun, from_schur, m_in_p

log = logging.getLogger(__name__)

CACHE_FORMAT = 1
CACHE_ENV = "CHARVAR_CACHE_DIR"

Q = RatFun.gen(0)
T = RatFun.gen(1)


def _qpow(e: int) -> RatFun:
    return RatFun.monomial(1, e, 0)


def _tpow(e: int) -> RatFun:
    return RatFun.monomial(1, 0, e)


# ---------------------------------------------------------------- Gram-Schmidt

def _gram_schmidt(n: int, weight) -> dict:
    """Monic orthogonal basis P_lambda = m_lambda + lower (in lex order) w.r.t.
    <p_rho, p_rho> = z_rho * weight(rho).  Returns {lambda: {rho: RatFun}}."""
    parts = list(reversed(partitions_of(n)))  # increasing lex order, (1^n) first
    w = {rho: weight(rho) * z_part(rho) for rho in parts}

    def pair(a: dict, b: dict) -> RatFun:
        total = ZERO
        for rho, c in a.items():
            d = b.get(rho)
            if d is not None:
                total = total + c * d * w[rho]
        return total

    basis: dict = {}
    norms: dict = {}
    for lam in parts:
        vec = {rho: RatFun.const(c) for rho, c in m_in_p(lam).items()}
        for mu in parts:
            if mu == lam:
                break
            coef = pair(vec, basis[mu]) / norms[mu]
            if coef.is_zero():
                continue
            for rho, c in basis[mu].items():
                vec[rho] = vec.get(rho, ZERO) - coef * c
            vec = {rho: c for rho, c in vec.items() if not c.is_zero()}
        basis[lam] = vec
        norms[lam] = pair(vec, vec)
    return basis


def _qt_weight(rho) -> RatFun:
    out = ONE
    for r in rho:
        out = out * (1 - _qpow(r)) / (1 - _tpow(r))
    return out


def _t_weight(rho) -> RatFun:
    out = ONE
    for r in rho:
        out = out / (1 - _tpow(r))
    return out


def _c_lambda(lam: Partition) -> RatFun:
    out = ONE
    for a, l in lam.arms_legs():
        out = out * (1 - RatFun.monomial(1, a, l + 1))
    return out


def _p_dict_to_schur(vec: dict) -> dict:
    n = sum(next(iter(vec))) if vec else 0
    f = SymFun(1, n, {(rho,): c for rho, c in vec.items()})
    return f.schur_coefficients()


def _compute_macdonald(n: int) -> dict:
    """{lambda: Schur expansion of H~_lambda(x; q, t)} for lambda of n."""
    if n == 0:
        return {Partition(()): {Partition(()): ONE}}
    pbasis = _gram_schmidt(n, _qt_weight)
    out = {}
    for lam, vec in pbasis.items():
        c = _c_lambda(lam)
        h = {}
        for rho, coef in vec.items():
            j = (coef * c).substitute((1, (1, 0)), (1, (0, -1)))  # t -> 1/t
            for r in rho:
                j = j / (1 - _tpow(-r))  # p_r -> p_r / (1 - t^-r)
            h[rho] = j * _tpow(lam.nstat())
        out[lam] = _p_dict_to_schur(h)
    return out


def _hl_via_plethysm(n: int) -> dict:
    """q^{n(mu)} b_mu(1/q) P_mu[X/(1 - 1/q); 1/q], with P the Hall-Littlewood P."""
    if n == 0:
        return {Partition(()): {Partition(()): ONE}}
    pbasis = _gram_schmidt(n, _t_weight)
    out = {}
    for mu, vec in pbasis.items():
        pref = _qpow(mu.nstat()) * b_lambda(mu).substitute((1, (-1, 0)), (1, (0, 1)))
        h = {}
        for rho, coef in vec.items():
            v = coef.substitute((0, (0, 0)), (1, (-1, 0)))  # t -> 1/q
            for r in rho:
                v = v / (1 - _qpow(-r))
            h[rho] = v * pref
        out[mu] = _p_dict_to_schur(h)
    return out


# ---------------------------------------------------------------- charge

def _horizontal_strips(outer_max: Partition, inner: Partition, size: int):
    """Partitions nu containing inner with nu/inner a horizontal strip of `size` cells, nu <= outer_max."""
    rows = max(len(outer_max), len(inner) + 1)
    inner_l = list(inner) + [0] * (rows - len(inner))
    outer_l = list(outer_max) + [0] * (rows - len(outer_max))
    out = []

    def rec(i, rem, acc):
        if i == rows:
            if rem == 0:
                out.append(acc[:])
            return
        # horizontal strip: new row i length <= old row i-1 length
        hi = outer_l[i] if i == 0 else min(outer_l[i], inner_l[i - 1])
        for v in range(inner_l[i], min(hi, inner_l[i] + rem) + 1):
            acc.append(v)
            rec(i + 1, rem - (v - inner_l[i]), acc)
            acc.pop()

    rec(0, size, [])
    return [Partition([x for x in nu if x]) for nu in out]


def ssyt(shape, content) -> list:
    """Semistandard tableaux of a shape with partition content, as lists of rows."""
    shape, content = Partition(shape), Partition(content)
    if shape.size != content.size:
        return []
    chains = [[Partition(())]]
    for size in content:
        chains = [c + [nu] for c in chains for nu in _horizontal_strips(shape, c[-1], size)]
    out = []
    for chain in chains:
        if chain[-1] != shape:
            continue
        rows = [[] for _ in shape]
        for val, (a, b) in enumerate(zip(chain, chain[1:]), start=1):
            for i in range(len(b)):
                prev = a[i] if i < len(a) else 0
                rows[i].extend([val] * (b[i] - prev))
        out.append(rows)
    return out


def charge(word: list) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    letters = list(word)
    positions = list(range(len(letters)))
    total = 0
    while letters:
        m = max(letters)
        # extract a standard subword scanning right-to-left cyclically
        chosen = []
        pos = len(letters)
        for r in range(1, m + 1):
            found = None
            for step in range(1, len(letters) + 1):
                j = (pos - step) % len(letters)
                if letters[j] == r and j not in chosen:
                    found = j
                    break
            if found is None:
                raise ValueError("word content is not a partition")
            chosen.append(found)
            pos = found
        idx = 0
        for r in range(1, m):
            a, b = chosen[r - 1], chosen[r]
            if positions[b] > positions[a]:
                idx += 1
            total += idx
        keep = [j for j in range(len(letters)) if j not in set(chosen)]
        letters = [letters[j] for j in keep]
        positions = [positions[j] for j in keep]
    return total


def reading_word(rows: list) -> list:
    out = []
    for row in reversed(rows):
        out.extend(row)
    return out


@lru_cache(maxsize=None)
def kostka_charge(nu: tuple, lam: tuple) -> dict:
    """K_{nu,lam}(t) as {exponent: count} from the charge statistic."""
    out: dict = {}
    for tab in ssyt(nu, lam):
        c = charge(reading_word(tab))
        out[c] = out.get(c, 0) + 1
    return out


def kostka_foulkes_charge(nu, lam) -> RatFun:
    """K~_{nu,lam}(q) = q^{n(lam)} K_{nu,lam}(1/q) via charge."""
    nu, lam = Partition(nu), Partition(lam)
    if nu.size != lam.size:
        raise SizeMismatch(f"|{nu}| != |{lam}|")
    n_l = lam.nstat()
    return RatFun.from_terms({(n_l - e, 0): c for e, c in kostka_charge(nu, lam).items()})


# ---------------------------------------------------------------- tables

def cache_dir() -> Path | None:
    env = os.environ.get(CACHE_ENV)
    if env is not None:
        return Path(env) if env else None
    return Path.home() / ".cache" / "charvar"


def _dump_table(table: dict) -> dict:
    return {str(lam): {str(nu): as_polynomial(c, QT).to_str() for nu, c in sorted(exp.items())}
            for lam, exp in sorted(table.items())}


def _load_table(data: dict) -> dict:
    from .combinat import parse_partition
    return {parse_partition(lam): {parse_partition(nu): parse_laurent(c, QT).to_ratfun()
                                   for nu, c in exp.items()}
            for lam, exp in data.items()}


class TableStore:
    """Per-degree Macdonald and Kostka-Foulkes tables with an advisory disk cache."""

    def __init__(self):
        self._lock = threading.Lock()
        self._mac: dict = {}
        self._kf: dict = {}
        self.hits = 0
        self.misses = 0

    def _path(self, n: int) -> Path | None:
        d = cache_dir()
        return None if d is None else d / f"tables-n{n}.json"

    def _read_disk(self, n: int):
        path = self._path(n)
        if path is None or not path.exists():
            return None
        try:
            data = json.loads(path.read_text())
            if data.get("format") != CACHE_FORMAT or data.get("n") != n:
                log.info("cache %s has a different format, rebuilding", path)
                return None
            return _load_table(data["macdonald"]), _load_table(data["kostka_foulkes"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring unreadable cache %s: %s", path, exc)
            return None

    def _write_disk(self, n: int, mac: dict, kf: dict):
        path = self._path(n)
        if path is None:
            return
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            payload = {"format": CACHE_FORMAT, "n": n, "macdonald": _dump_table(mac),
                       "kostka_foulkes": _dump_table(kf)}
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(payload, sort_keys=True, indent=1))
            tmp.replace(path)
        except OSError as exc:
            log.warning("could not write cache %s: %s", path, exc)

    def tables(self, n: int):
        with self._lock:
            if n in self._mac:
                return self._mac[n], self._kf[n]
            got = self._read_disk(n)
            if got is not None:
                self.hits += 1
                mac, kf = got
            else:
                self.misses += 1
                mac = _compute_macdonald(n)
                kf = {lam: {nu: kostka_foulkes_charge(nu, lam) for nu in partitions_of(n)
                            if kostka_charge(nu, lam)} for lam in partitions_of(n)}
                self._write_disk(n, mac, kf)
            self._mac[n], self._kf[n] = mac, kf
            return mac, kf

    def clear_memory(self):
        with self._lock:
            self._mac.clear()
            self._kf.clear()


STORE = TableStore()


def macdonald_schur(lam) -> dict:
    lam = Partition(lam)
    return STORE.tables(lam.size)[0][lam]


def hall_littlewood_schur(lam) -> dict:
    lam = Partition(lam)
    return STORE.tables(lam.size)[1][lam]


def macdonald(lam) -> SymFun:
    """H~_lambda(x; q, t) in one alphabet, power-sum basis."""
    return from_schur(macdonald_schur(lam), Partition(lam).size)


def hall_littlewood(lam) -> SymFun:
    """H~_lambda(x; q) = H~_lambda(x; 0, q), from the charge table."""
    return from_schur(hall_littlewood_schur(lam), Partition(lam).size)


def hall_littlewood_plethystic(lam) -> dict:
    """Schur expansion of the second Hall-Littlewood construction (cross-check)."""
    lam = Partition(lam)
    return _hl_plethystic_table(lam.size)[lam]


@lru_cache(maxsize=None)
def _hl_plethystic_table(n: int) -> dict:
    return _hl_via_plethysm(n)


def specialize_zero_q(c: RatFun) -> RatFun:
    """(q, t) -> (0, q)."""
    return c.substitute((0, (0, 0)), (1, (1, 0)))


def kostka_foulkes(nu, lam) -> RatFun:
    nu, lam = Partition(nu), Partition(lam)
    if nu.size != lam.size:
        raise SizeMismatch(f"|{nu}| != |{lam}|")
    return hall_littlewood_schur(lam).get(nu, ZERO)


def green(nu, tau) -> RatFun:
    """Q^tau_nu(q) for partitions, or the type version prod_i Q^{omega_i}_{tau_i}(q^{d_i})."""
    if isinstance(nu, TypeT) or isinstance(tau, TypeT):
        nu, tau = TypeT(nu), TypeT(tau)
        if nu.degree_profile() != tau.degree_profile():
            return ZERO
        out = ONE
        for (d, a), (_, b) in zip(nu, tau):
            out = out * green(a, b).adams(d)
        return out
    nu, tau = Partition(nu), Partition(tau)
    if nu.size != tau.size:
        raise SizeMismatch(f"|{nu}| != |{tau}|")
    total = ZERO
    for rho in partitions_of(nu.size):
        ch = sym_char(rho, nu)
        if ch:
            total = total + kostka_foulkes(rho, tau) * ch
    return total


# ---------------------------------------------------------------- hook functions

def hook_genus(lam, g: int) -> RatFun:
    """Genus-g hook function in (z, w)."""
    lam = Partition(lam)
    out = ONE
    for a, l in lam.arms_legs():
        num = (RatFun.monomial(1, 2 * a + 1, 0) - RatFun.monomial(1, 0, 2 * l + 1)) ** (2 * g)
        den = (RatFun.monomial(1, 2 * a + 2, 0) - RatFun.monomial(1, 0, 2 * l)) * \
              (RatFun.monomial(1, 2 * a, 0) - RatFun.monomial(1, 0, 2 * l + 2))
        out = out * num / den
    return out


def b_lambda(lam) -> RatFun:
    """prod over part multiplicities m of (1-q)(1-q^2)...(1-q^m)."""
    out = ONE
    for m in Partition(lam).multiplicities().values():
        for j in range(1, m + 1):
            out = out * (1 - _qpow(j))
    return out


def a_lambda(lam) -> RatFun:
    """q^{<lam,lam>} b_lam(1/q): the centralizer order of a unipotent class of type lam."""
    lam = Partition(lam)
    return _qpow(lam.pairing()) * b_lambda(lam).substitute((1, (-1, 0)), (1, (0, 1)))


def hook_poly(lam) -> RatFun:
    out = ONE
    for h in Partition(lam).hooks():
        out = out * (1 - _qpow(h))
    return out


class HookSpecials:
    __slots__ = ("pure", "epoly", "hookpoly", "a_lambda")

    def __init__(self, pure, epoly, hookpoly, a_lam):
        self.pure, self.epoly, self.hookpoly, self.a_lambda = pure, epoly, hookpoly, a_lam


def hook_specials(lam, g: int) -> HookSpecials:
    lam = Partition(lam)
    a = a_lambda(lam)
    hp = hook_poly(lam)
    pure = _qpow(g * lam.pairing()) / a
    epoly = _qpow(-(g - 1) * lam.pairing()) * hp ** (2 * g - 2)
    return HookSpecials(pure, epoly, hp, a)

"""Closed-form character table of GL_2(F_q), q an odd prime.

Notation: gamma generates F_{q^2}^x, N = q^2 - 1, and every value lies in
Q(zeta_N). A linear character alpha_i of F_q^x sends x to zeta_N^{i L(x)}
where L(x) is the log of x base gamma (a multiple of q + 1); a character
phi_j of F_{q^2}^x sends gamma^l to zeta_N^{j l}.

Classes:     ("a", x) = xI,  ("b", x) = [[x,1],[0,x]],  ("c", x, y) = diag(x, y) with x < y,
             ("d", l) elliptic with eigenvalues gamma^l, gamma^{lq}.
Characters:  ("U", i) degree 1,  ("V", i) degree q,  ("W", i, j) degree q+1,  ("X", j) degree q-1.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..combinat import Partition
from .cyclotomic import Cyclo
from .fields import Fq2, gl_order
from .generic import find_generic_exponents


class CharTableGL2:
    def __init__(self, q: int):
        if q % 2 == 0:
            raise NotImplementedError("only odd q is supported")
        self.q = q
        self.ext = Fq2(q)
        self.N = q * q - 1
        self.group_order = gl_order(2, q)
        self._zeta = [Cyclo.zeta(self.N, k) for k in range(self.N)]
        self._L = {x: self.ext.embed_log(x) for x in range(1, q)}
        self.classes = self._classes()
        self.characters = self._characters()

    def _canon_elliptic(self, l):
        return min(l % self.N, (l * self.q) % self.N)

    def _classes(self):
        q = self.q
        out = [("a", x) for x in range(1, q)]
        out += [("b", x) for x in range(1, q)]
        out += [("c", x, y) for x in range(1, q) for y in range(x + 1, q)]
        out += sorted({("d", self._canon_elliptic(l)) for l in range(self.N) if l % (q + 1)})
        return out

    def _characters(self):
        q, N = self.q, self.N
        out = [("U", i) for i in range(q - 1)]
        out += [("V", i) for i in range(q - 1)]
        out += [("W", i, j) for i in range(q - 1) for j in range(i + 1, q - 1)]
        out += sorted({("X", min(j, (j * q) % N)) for j in range(N) if (j * (q - 1)) % N})
        return out

    def class_size(self, label) -> int:
        q = self.q
        return {"a": 1, "b": q * q - 1, "c": q * q + q, "d": q * q - q}[label[0]]

    def centralizer_dim(self, label) -> int:
        return 4 if label[0] == "a" else 2

    def degree(self, chi) -> int:
        q = self.q
        return {"U": 1, "V": q, "W": q + 1, "X": q - 1}[chi[0]]

    def class_of(self, matrix) -> tuple:
        (a, b), (c, d) = matrix
        q = self.q
        tr = (a + d) % q
        det = (a * d - b * c) % q
        disc = (tr * tr - 4 * det) % q
        if det == 0:
            raise ValueError("matrix is not invertible")
        if disc == 0:
            x = tr * pow(2, -1, q) % q
            return ("a", x) if (b % q, c % q, (a - d) % q) == (0, 0, 0) else ("b", x)
        if self.ext.base.is_square(disc):
            r = self.ext.base.sqrt(disc)
            half = pow(2, -1, q)
            x, y = sorted(((tr + r) * half % q, (tr - r) * half % q))
            return ("c", x, y)
        root, _ = self.ext.roots_of_quadratic(tr, det)
        return ("d", self._canon_elliptic(self.ext.log(root)))

    def _z(self, k) -> Cyclo:
        return self._zeta[k % self.N]

    def value(self, chi, label) -> Cyclo:
        q, L, z = self.q, self._L, self._z
        kind = chi[0]
        cls = label[0]
        if kind in "UV":
            i = chi[1]
            if cls in "ab":
                v = z(2 * i * L[label[1]])
                if kind == "V":
                    v = v * (q if cls == "a" else 0)
                return v
            if cls == "c":
                return z(i * (L[label[1]] + L[label[2]]))
            # alpha(N xi) with N xi = gamma^{l (q+1)}
            v = z(i * label[1] * (q + 1))
            return v if kind == "U" else -v
        if kind == "W":
            i, j = chi[1], chi[2]
            if cls in "ab":
                x = L[label[1]]
                return z((i + j) * x) * (q + 1 if cls == "a" else 1)
            if cls == "c":
                x, y = L[label[1]], L[label[2]]
                return z(i * x + j * y) + z(i * y + j * x)
            return Cyclo.const(self.N, 0)
        j = chi[1]
        if cls in "ab":
            return z(j * L[label[1]]) * (q - 1 if cls == "a" else -1)
        if cls == "c":
            return Cyclo.const(self.N, 0)
        l = label[1]
        return -(z(j * l) + z(j * l * q))

    def inner(self, chi, psi) -> Fraction:
        total = Cyclo.const(self.N, 0)
        for c in self.classes:
            total = total + self.value(chi, c) * self.value(psi, c).conj() * self.class_size(c)
        return (total / self.group_order).rational()

    def check_orthogonality(self) -> bool:
        chars = self.characters
        for a, chi in enumerate(chars):
            for psi in chars[a:]:
                if self.inner(chi, psi) != (1 if chi == psi else 0):
                    return False
        return True

    def check_columns(self) -> bool:
        """Column orthogonality: sum_chi |chi(C)|^2 = |C_G(C)|."""
        for c in self.classes:
            s = Cyclo.const(self.N, 0)
            for chi in self.characters:
                v = self.value(chi, c)
                s = s + v * v.conj()
            if s != Cyclo.const(self.N, self.group_order // self.class_size(c)):
                return False
        return True

    def sum_of_squares(self) -> int:
        return sum(self.degree(chi) ** 2 for chi in self.characters)

    def plancherel_mass(self) -> Fraction:
        return sum((Fraction(self.degree(chi) ** 2, self.group_order) for chi in self.characters),
                   Fraction(0))


@lru_cache(maxsize=None)
def gl2_char_table(q: int) -> CharTableGL2:
    return CharTableGL2(q)


def generic_characters(mu, q: int):
    """Irreducible characters of types mu^i-dagger whose linear data form a generic tuple.

    mu^i = (2) gives U_alpha, mu^i = (1,1) gives W_{alpha,beta}; the exponents of the
    linear characters of F_q^x satisfy the same sub-multiset conditions as
    multiplicative eigenvalues.
    """
    mu = tuple(Partition(m) for m in mu)
    if any(m.size != 2 for m in mu):
        raise ValueError("generic characters are only tabulated for n = 2")
    exps = find_generic_exponents(mu, q - 1)
    out = []
    for m, es in zip(mu, exps):
        if len(m) == 1:
            out.append(("U", es[0]))
        else:
            out.append(("W",) + tuple(sorted(es)))
    return tuple(out)


def multiplicity_from_table(g: int, mu, q: int) -> int:
    """<Lambda (x) R_mu, 1> with Lambda(x) = q^{g dim C_G(x)}, from the GL_2(F_q) table."""
    table = gl2_char_table(q)
    chars = generic_characters(mu, q)
    total = Cyclo.const(table.N, 0)
    for c in table.classes:
        term = Cyclo.const(table.N, Fraction(table.class_size(c), table.group_order)
                           * q ** (g * table.centralizer_dim(c)))
        for chi in chars:
            term = term * table.value(chi, c)
        total = total + term
    val = total.rational()
    assert val.denominator == 1, "multiplicity is not an integer"
    return int(val)

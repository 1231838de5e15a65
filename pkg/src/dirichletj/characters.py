"""Dirichlet characters chi: (Z/N)^x -> Q(zeta)^x.

Characters are stored as exponent tuples over a canonical generator
decomposition of the unit group:

* odd p^v: one generator, the smallest positive primitive root mod p^v
  (verified at construction);
* 2: no generator; 4: [3] of order 2; 2^v (v >= 3): [2^v - 1, 5] of
  orders 2 and 2^(v-2).

Values land in Q(zeta_n) with n the order of the character, the minimal
field; coercion into larger cyclotomic fields is explicit.  Character
``N:i`` on the CLI refers to index ``i`` in the deterministic
mixed-radix enumeration below (index 0 is the trivial character).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CycElement, euler_phi, factorize, get_field, is_prime


def _order_mod(a: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not a unit mod {modulus}")
    order, x = 1, a % modulus
    while x != 1:
        x = (x * a) % modulus
        order += 1
    return order


def smallest_primitive_root(q: int, phi: int) -> int:
    """Smallest positive primitive root mod q = p^v, p odd; verified."""
    prime_divs = list(factorize(phi))
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // r, q) != 1 for r in prime_divs):
            assert _order_mod(g, q) == phi
            return g
    raise ValueError(f"no primitive root mod {q}")


def _crt_lift(residue: int, modulus: int, full_modulus: int) -> int:
    """x with x = residue mod modulus, x = 1 mod full_modulus/modulus."""
    other = full_modulus // modulus
    if other == 1:
        return residue % full_modulus
    inv = pow(modulus, -1, other)
    # x = residue + modulus * t, t chosen so x = 1 mod other.
    t = ((1 - residue) * inv) % other
    return (residue + modulus * t) % full_modulus


@dataclass(frozen=True)
class UnitGroupStructure:
    """Canonical cyclic decomposition of (Z/N)^x with CRT-lifted generators."""

    modulus: int
    # One entry per generator: (prime, prime_exponent, lifted generator, order).
    generators: tuple[tuple[int, int, int, int], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(g[3] for g in self.generators)

    def phi(self) -> int:
        out = 1
        for o in self.orders:
            out *= o
        return out


@lru_cache(maxsize=None)
def get_structure(N: int) -> UnitGroupStructure:
    if N < 1:
        raise ValueError("modulus must be positive")
    gens: list[tuple[int, int, int, int]] = []
    for p, v in sorted(factorize(N).items()):
        q = p**v
        if p == 2:
            if v == 1:
                continue
            if v == 2:
                locals_ = [(3, 2)]
            else:
                locals_ = [(q - 1, 2), (5, 2 ** (v - 2))]
        else:
            phi = euler_phi(q)
            locals_ = [(smallest_primitive_root(q, phi), phi)]
        for g, order in locals_:
            assert _order_mod(g, q) == order
            gens.append((p, v, _crt_lift(g, q, N), order))
    structure = UnitGroupStructure(modulus=N, generators=tuple(gens))
    assert structure.phi() == euler_phi(N)
    return structure


@lru_cache(maxsize=None)
def _dlog_table(N: int) -> dict[int, tuple[int, ...]]:
    """Exponent tuples of every unit mod N over the canonical generators."""
    st = get_structure(N)
    table: dict[int, tuple[int, ...]] = {1 % N: tuple([0] * len(st.generators))}
    if N == 1:
        return {0: ()}
    frontier = {1 % N: tuple([0] * len(st.generators))}
    # BFS over the generator action covers the whole group.
    while len(table) < euler_phi(N):
        new: dict[int, tuple[int, ...]] = {}
        for a, exps in frontier.items():
            for i, (_, _, g, order) in enumerate(st.generators):
                b = (a * g) % N
                if b not in table:
                    e = list(exps)
                    e[i] = (e[i] + 1) % order
                    table[b] = tuple(e)
                    new[b] = tuple(e)
        frontier = new
    return table


@dataclass(frozen=True)
class DirichletCharacter:
    """Exponent tuple over the canonical generators of (Z/N)^x."""

    structure: UnitGroupStructure
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.structure.generators):
            raise ValueError("exponent tuple has wrong length")
        for e, o in zip(self.exponents, self.structure.orders):
            if not 0 <= e < o:
                raise ValueError("exponents must be reduced modulo generator orders")

    @property
    def modulus(self) -> int:
        return self.structure.modulus

    def order(self) -> int:
        n = 1
        for e, o in zip(self.exponents, self.structure.orders):
            value_order = o // math.gcd(e, o)
            n = n * value_order // math.gcd(n, value_order)
        return n

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def index(self) -> int:
        """Position in the mixed-radix enumeration order."""
        idx = 0
        for e, o in zip(self.exponents, self.structure.orders):
            idx = idx * o + e
        return idx

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.modulus}:{self.index()})"


def enumerate_characters(N: int) -> list[DirichletCharacter]:
    """All phi(N) characters mod N in deterministic mixed-radix order."""
    st = get_structure(N)
    out = []
    total = st.phi()
    orders = st.orders
    for idx in range(total):
        exps = []
        rem = idx
        for o in reversed(orders):
            exps.append(rem % o)
            rem //= o
        out.append(DirichletCharacter(st, tuple(reversed(exps))))
    return out


def character_from_index(N: int, index: int) -> DirichletCharacter:
    st = get_structure(N)
    total = st.phi()
    if not 0 <= index < total:
        raise ValueError(f"character index out of range: {index} (phi({N}) = {total})")
    exps = []
    rem = index
    for o in reversed(st.orders):
        exps.append(rem % o)
        rem //= o
    return DirichletCharacter(st, tuple(reversed(exps)))


def _value_exponent(chi: DirichletCharacter, a: int) -> int | None:
    """t with chi(a) = zeta_n^t (n = order of chi), or None on non-units."""
    N = chi.modulus
    if N == 1:
        return 0
    if math.gcd(a, N) != 1:
        return None
    n = chi.order()
    dlogs = _dlog_table(N)[a % N]
    t = 0
    for e, d, o in zip(chi.exponents, dlogs, chi.structure.orders):
        # chi(g_i) = zeta_{o_i}^{e_i} = zeta_n^{e_i * n / o_i}; the value
        # order o_i / gcd(e_i, o_i) divides n, so e_i * n / o_i is integral.
        assert (e * n) % o == 0
        t += (e * n // o) * d
    return t % n


def evaluate(chi: DirichletCharacter, a: int) -> CycElement | None:
    """chi(a) as a CycElement of Q(zeta_ord(chi)); None marks chi(a) = 0."""
    t = _value_exponent(chi, a)
    if t is None:
        return None
    return get_field(chi.order()).zeta_power(t)


def parity(chi: DirichletCharacter) -> int:
    """chi(-1), guaranteed +-1."""
    t = _value_exponent(chi, chi.modulus - 1 if chi.modulus > 1 else 0)
    n = chi.order()
    if t == 0:
        return 1
    assert 2 * t == n, "chi(-1) must be a square root of 1"
    return -1


def conductor(chi: DirichletCharacter) -> int:
    """Smallest M | N with chi trivial on the kernel of (Z/N)^x -> (Z/M)^x."""
    N = chi.modulus
    for M in sorted(d for d in range(1, N + 1) if N % d == 0):
        ok = True
        for a in range(1, N + 1):
            if math.gcd(a, N) != 1:
                continue
            if a % M == 1 % M and _value_exponent(chi, a) != 0:
                ok = False
                break
        if ok:
            return M
    raise AssertionError("unreachable: N itself always works")


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def char_mul(a: DirichletCharacter, b: DirichletCharacter) -> DirichletCharacter:
    if a.modulus != b.modulus:
        raise ValueError("modulus mismatch")
    exps = tuple((x + y) % o for x, y, o in zip(a.exponents, b.exponents, a.structure.orders))
    return DirichletCharacter(a.structure, exps)


def char_inv(a: DirichletCharacter) -> DirichletCharacter:
    exps = tuple((-x) % o for x, o in zip(a.exponents, a.structure.orders))
    return DirichletCharacter(a.structure, exps)


def char_pow(a: DirichletCharacter, k: int) -> DirichletCharacter:
    exps = tuple((x * k) % o for x, o in zip(a.exponents, a.structure.orders))
    return DirichletCharacter(a.structure, exps)


def primitivize(chi: DirichletCharacter) -> DirichletCharacter:
    """The primitive character mod conductor(chi) inducing chi."""
    M = conductor(chi)
    if M == chi.modulus:
        return chi
    st = get_structure(M)
    N = chi.modulus
    exps = []
    for _, _, g, order in st.generators:
        # Lift g mod M to a unit mod N congruent to g (exists since M | N).
        b = g
        while math.gcd(b, N) != 1:
            b += M
        t = _value_exponent(chi, b)
        n = chi.order()
        # chi(b) = zeta_n^t must be an order-dividing-`order` root: exponent on g.
        assert (t * order) % n == 0
        exps.append((t * order // n) % order)
    out = DirichletCharacter(st, tuple(exps))
    assert out.order() == chi.order()
    return out


def factor_local(chi: DirichletCharacter) -> dict[int, DirichletCharacter]:
    """chi = prod_p chi_p with chi_p of modulus p^(v_p(N))."""
    N = chi.modulus
    out: dict[int, DirichletCharacter] = {}
    for p, v in sorted(factorize(N).items()):
        q = p**v
        st_local = get_structure(q)
        exps = []
        for _, _, g_local, order in st_local.generators:
            lift = _crt_lift(g_local, q, N)
            t = _value_exponent(chi, lift)
            n = chi.order()
            assert (t * order) % n == 0
            exps.append((t * order // n) % order)
        out[p] = DirichletCharacter(st_local, tuple(exps))
    return out


def ell_of_chi(chi: DirichletCharacter) -> int:
    """The auxiliary prime ell(chi): ell when |image(chi)| is a power of a
    prime ell different from the conductor prime, else 1.

    The conductor must be a prime power p^v (or 1).  When the image size
    is a power of p itself we return 1: inverting p would trivialize the
    denominator comparison, so only ell != p qualifies.
    """
    N = conductor(chi)
    if N == 1:
        return 1
    fac = factorize(N)
    if len(fac) != 1:
        raise ValueError("conductor is not a prime power")
    p = next(iter(fac))
    n = chi.order()
    nfac = factorize(n)
    if len(nfac) == 1:
        ell = next(iter(nfac))
        if ell != p:
            return ell
    return 1


def kernel_order_match(k: int, p: int, chi_tame_order: int) -> bool:
    """Whether ker omega^k = ker chi inside the cyclic group (Z/p)^x.

    Subgroups of a cyclic group are determined by their order, so the
    comparison reduces to gcd(k, p-1) == (p-1)/ord(chi).
    """
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if (p - 1) % chi_tame_order:
        raise ValueError("tame order must divide p - 1")
    return math.gcd(k, p - 1) == (p - 1) // chi_tame_order


def tame_order(chi: DirichletCharacter, p: int) -> int:
    """Order of chi restricted to the prime-to-p (tame) part of (Z/p^v)^x.

    For odd p this is the order of chi_p^(p^(v-1)); for p = 2 it is 1 or 2
    according to the parity of the 2-local factor.
    """
    N = chi.modulus
    v = 0
    M = N
    while M % p == 0:
        M //= p
        v += 1
    if v == 0:
        return 1
    chi_p = factor_local(chi)[p]
    if p == 2:
        return 2 if parity(chi_p) == -1 else 1
    return char_pow(chi_p, p ** (v - 1)).order()


def display(chi: DirichletCharacter) -> dict:
    """JSON-friendly descriptor used by the CLI."""
    return {
        "modulus": chi.modulus,
        "index": chi.index(),
        "conductor": conductor(chi),
        "order": chi.order(),
        "parity": parity(chi),
        "exponents": list(chi.exponents),
        "primitive": is_primitive(chi),
    }

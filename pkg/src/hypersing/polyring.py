"""Exact sparse multivariate polynomial arithmetic over ZZ/QQ and prime fields.

A polynomial is stored as a map from exponent tuples to nonzero coefficients:

    x1*x2^2 - x3^2   ->   {(1, 2, 0): 1, (0, 0, 2): -1}

Every polynomial carries a ring mode: characteristic 0 (coefficients are
Python ints, or Fractions where a rational point has been substituted) or a
prime field F_p (coefficients are ints in [1, p-1]; zero is never stored).
All arithmetic is exact; no floats appear anywhere in this module.

Canonical form: no duplicate exponent tuples, no zero coefficients, and a
deterministic term order (graded lexicographic, largest first) used for
printing and for choosing witness monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from math import comb

Coeff = "int | Fraction"


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (scan primes are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi (endpoints need not be prime)."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def _trim(exponents: tuple[int, ...]) -> tuple[int, ...]:
    k = len(exponents)
    while k > 0 and exponents[k - 1] == 0:
        k -= 1
    return exponents[:k]


@dataclass(frozen=True, eq=False)
class Monomial:
    """An exponent vector, one entry per variable position.

    Monomials over different ambient sizes compare equal when they agree
    after trimming trailing zero exponents.
    """

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(e, int) and e >= 0 for e in self.exponents):
            raise ValueError("monomial exponents must be nonnegative integers")
        object.__setattr__(self, "exponents", tuple(self.exponents))

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return _trim(self.exponents) == _trim(other.exponents)

    def __hash__(self) -> int:
        return hash(_trim(self.exponents))

    def __str__(self) -> str:
        return format_monomial(self.exponents)


def grlex_key(exponents: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sort key for graded-lexicographic order (degree first, then lex)."""
    return (sum(exponents), exponents)


def format_monomial(exponents: tuple[int, ...], names: tuple[str, ...] | None = None) -> str:
    parts = []
    for i, e in enumerate(exponents):
        if e == 0:
            continue
        name = names[i] if names is not None else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse multivariate polynomial over ZZ/QQ (char 0) or F_p (char p).

    Instances are immutable after construction; all operations return new
    polynomials and are safe to share across threads.
    """

    __slots__ = ("nvars", "char", "_terms")

    def __init__(self, nvars: int, terms=None, char: int = 0):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        if char != 0 and not is_prime(char):
            raise ValueError(f"characteristic must be 0 or a prime, got {char}")
        clean: dict[tuple[int, ...], Coeff] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} does not have length {nvars}")
            if not all(isinstance(e, int) and e >= 0 for e in exps):
                raise ValueError(f"exponents must be nonnegative integers: {exps}")
            c = _normalize_coeff(c, char)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                clean[exps] = _normalize_coeff(clean[exps], char)
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "_terms", clean)

    # Trusted path for arithmetic results: exponents already validated,
    # only zero-drop and mod-p reduction still needed.
    @classmethod
    def _make(cls, nvars: int, raw: dict, char: int) -> "Polynomial":
        self = object.__new__(cls)
        if char:
            clean = {}
            for exps, c in raw.items():
                c %= char
                if c:
                    clean[exps] = c
        else:
            clean = {exps: _intify(c) for exps, c in raw.items() if c}
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "_terms", clean)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, nvars: int, char: int = 0) -> "Polynomial":
        return cls(nvars, {}, char)

    @classmethod
    def constant(cls, nvars: int, value, char: int = 0) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value}, char)

    @classmethod
    def variable(cls, nvars: int, index: int, char: int = 0) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1}, char)

    @classmethod
    def monomial(cls, nvars: int, powers: dict[int, int], coeff=1, char: int = 0) -> "Polynomial":
        """Single term with the given {variable position: exponent} map."""
        exps = [0] * nvars
        for i, e in powers.items():
            if not 0 <= i < nvars:
                raise ValueError(f"variable index {i} out of range for {nvars} variables")
            exps[i] = e
        return cls(nvars, {tuple(exps): coeff}, char)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def items(self):
        """Iterate (exponent tuple, coefficient) in descending grlex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    @property
    def terms(self) -> dict[Monomial, Coeff]:
        """Canonical view of the term map, keyed by Monomial."""
        return {Monomial(e): c for e, c in self.items()}

    def coefficient(self, exponents) -> Coeff:
        if isinstance(exponents, Monomial):
            exponents = exponents.exponents
        exps = tuple(exponents)
        if len(exps) != self.nvars:
            exps = exps + (0,) * (self.nvars - len(exps))
        return self._terms.get(exps, 0)

    def total_degree(self) -> int:
        """Maximum term degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=0)

    def min_term(self) -> tuple[Monomial, Coeff]:
        """The graded-lex least term (used for deterministic witnesses)."""
        if not self._terms:
            raise ValueError("the zero polynomial has no terms")
        exps = min(self._terms, key=grlex_key)
        return Monomial(exps), self._terms[exps]

    def variables_used(self) -> set[int]:
        return {i for exps in self._terms for i, e in enumerate(exps) if e > 0}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.char == other.char
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r}, nvars={self.nvars}, char={self.char})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, names: tuple[str, ...] | None = None) -> str:
        """Render in the expression grammar, terms in descending grlex order."""
        if not self._terms:
            return "0"
        if names is not None and len(names) != self.nvars:
            raise ValueError("name list length must equal the variable count")
        out = []
        for exps, c in self.items():
            mono = format_monomial(exps, names)
            if mono == "1":
                body = str(abs(c) if isinstance(c, int) else abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            negative = c < 0
            if not out:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(out)

    # -- ring operations ----------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.char != other.char:
            raise ValueError(
                f"ring mode mismatch: characteristic {self.char} vs {other.char}"
            )
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def _coerce_scalar(self, value) -> "Polynomial":
        return Polynomial.constant(self.nvars, value, self.char)

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = self._coerce_scalar(other)
        self._check_compatible(other)
        raw = dict(self._terms)
        for exps, c in other._terms.items():
            raw[exps] = raw.get(exps, 0) + c
        return Polynomial._make(self.nvars, raw, self.char)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(
            self.nvars, {e: -c for e, c in self._terms.items()}, self.char
        )

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = self._coerce_scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce_scalar(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = self._coerce_scalar(other)
        self._check_compatible(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.nvars, self.char)
        raw: dict[tuple[int, ...], Coeff] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                raw[key] = raw.get(key, 0) + ca * cb
        return Polynomial._make(self.nvars, raw, self.char)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(self.nvars, 1, self.char)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- ring maps ----------------------------------------------------------

    def reduce_mod(self, p: int) -> "Polynomial":
        """Reduce a characteristic-0 polynomial into F_p."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if self.char != 0:
            raise ValueError("reduce_mod expects a characteristic-0 polynomial")
        raw = {}
        for exps, c in self._terms.items():
            if isinstance(c, Fraction):
                raise ValueError("reduce_mod requires integer coefficients")
            raw[exps] = c % p
        return Polynomial._make(self.nvars, raw, p)

    def evaluate(self, point) -> Coeff:
        """Exact evaluation at a point (ints/Fractions, or residues mod p)."""
        pt = list(point)
        if len(pt) != self.nvars:
            raise ValueError(f"point length {len(pt)} != variable count {self.nvars}")
        total = 0
        for exps, c in self._terms.items():
            value = c
            for e, v in zip(exps, pt):
                if e:
                    value *= v ** e
            total += value
        if self.char:
            return total % self.char
        return _intify(total)

    def translate(self, point) -> "Polynomial":
        """Substitute x_i -> x_i + a_i, exactly (characteristic 0 only)."""
        if self.char != 0:
            raise ValueError("translate is defined in characteristic 0 only")
        pt = [a if isinstance(a, (int, Fraction)) else Fraction(a) for a in point]
        if len(pt) != self.nvars:
            raise ValueError(f"point length {len(pt)} != variable count {self.nvars}")
        raw: dict[tuple[int, ...], Coeff] = {}
        for exps, c in self._terms.items():
            # Per-variable binomial expansions; variables with a_i = 0 pass through.
            choices = []
            for e, a in zip(exps, pt):
                if a == 0 or e == 0:
                    choices.append(((e, 1),))
                else:
                    choices.append(tuple((k, comb(e, k) * a ** (e - k)) for k in range(e + 1)))
            for combo in _cartesian(*choices):
                key = tuple(k for k, _ in combo)
                value = c
                for _, w in combo:
                    value *= w
                raw[key] = raw.get(key, 0) + value
        return Polynomial._make(self.nvars, raw, 0)

    def permute(self, permutation) -> "Polynomial":
        """Rename variables: position i moves to permutation[i] (a bijection)."""
        perm = list(permutation)
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("permutation must be a bijection on variable positions")
        raw = {}
        for exps, c in self._terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i]] = e
            raw[tuple(new)] = c
        return Polynomial._make(self.nvars, raw, self.char)

    def diff(self, index: int) -> "Polynomial":
        """Formal partial derivative with respect to variable `index`."""
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range")
        raw = {}
        for exps, c in self._terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1:]
            raw[key] = raw.get(key, 0) + c * e
        return Polynomial._make(self.nvars, raw, self.char)

    def scale(self, value) -> "Polynomial":
        """Multiply every coefficient by an exact scalar."""
        if self.char:
            value = value % self.char
        return Polynomial._make(
            self.nvars, {e: c * value for e, c in self._terms.items()}, self.char
        )

    def divide_coefficients(self, value) -> "Polynomial":
        """Divide every coefficient by a nonzero scalar, exactly."""
        if self.char:
            inv = pow(value % self.char, -1, self.char)
            return self.scale(inv)
        if value == 0:
            raise ZeroDivisionError("division of coefficients by zero")
        return Polynomial._make(
            self.nvars,
            {e: Fraction(c) / value for e, c in self._terms.items()},
            0,
        )


def _intify(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _normalize_coeff(c, char: int):
    if isinstance(c, Fraction):
        if char:
            raise ValueError("prime-field coefficients must be integers")
        return _intify(c)
    if not isinstance(c, int):
        raise ValueError(f"coefficients must be exact ints or Fractions, got {type(c).__name__}")
    return c % char if char else c


# -- expression parser -------------------------------------------------------
#
# expr   := ('+'|'-')? term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := base ('^' uint)?
# base   := uint | ident | '(' expr ')'


class PolyParseError(ValueError):
    """Syntax or name error in a polynomial expression, with position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_CHARS = set("+-*^()")


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: list[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.nvars = len(variables)
        self.index = {name: i for i, name in enumerate(variables)}
        if len(self.index) != len(variables):
            raise ValueError("duplicate variable names")

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        kind, _, _ = self.peek()
        negate = False
        if kind in "+-":
            negate = self.advance()[0] == "-"
        result = self.term()
        if negate:
            result = -result
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            rhs = self.term()
            result = result - rhs if op == "-" else result + rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[0] == "^":
            self.advance()
            kind, text, pos = self.peek()
            if kind != "int":
                raise PolyParseError("exponent must be a nonnegative integer literal", pos)
            self.advance()
            return base ** int(text)
        return base

    def base(self) -> Polynomial:
        kind, text, pos = self.advance()
        if kind == "int":
            return Polynomial.constant(self.nvars, int(text))
        if kind == "ident":
            if text not in self.index:
                raise PolyParseError(f"unknown variable {text!r}", pos)
            return Polynomial.variable(self.nvars, self.index[text])
        if kind == "(":
            inner = self.expr()
            kind, _, pos = self.advance()
            if kind != ")":
                raise PolyParseError("expected ')'", pos)
            return inner
        raise PolyParseError(f"expected a number, variable, or '(', got {text!r}" if text else "unexpected end of expression", pos)


def parse_poly(text: str, variables) -> Polynomial:
    """Parse an expression over ZZ in the declared (ordered) variables."""
    parser = _Parser(text, list(variables))
    result = parser.expr()
    kind, text_, pos = parser.peek()
    if kind != "end":
        raise PolyParseError(f"unexpected trailing input {text_!r}", pos)
    return result

"""
PipeDegen – Grassmanniana semi-infinita
========================================
Poset cilíndrico (Q, ≺), tuberías sobre su diagrama de Hasse, w_M sobre
Q, r y θ_∞, el orden revlex ⋖ sobre las variables z^{(l)}_{i,j}, los
coeficientes D^{(l)} de los menores en series y ψ_∞, más la verificación
truncada a ideales con d(J) ≤ D.

FÓRMULAS:
    (i₁,j₁) ⪯ (i₂,j₂)  ⇔  (i₁ ≤ i₂ ∧ j₁ ≤ j₂) ∨ i₂−i₁ ≥ k ∨ j₂−j₁ ≥ n−k
    ⟨i,j⟩ = (i+mk, j−m(n−k)),  m = ⌊(j−i)/n⌋
    s̃_{i,j} = (i mod k, j mod (n−k)),  con i mod k ∈ [1,k], j mod (n−k) ∈ [k+1,n]
    θ'(z_{(i,j)}) = z^{(q)}_{a,r(i,j)},  i = qk + a

DECISIONES DE DISEÑO:
    - Las aristas del diagrama de Hasse son de dos clases: EDGE_I une
      (i,j) con ⟨i+1,j⟩ y EDGE_J une (i,j) con ⟨i,j+1⟩. Toda tubería baja
      por coberturas inferiores y conserva la clase salvo en elementos de M.
    - La extensión lineal ordena por (n−k)·i + k·j (crece en las cuatro
      clases de cobertura) y desempata por i; con debug_checks se
      recalcula w_M con el desempate −i.
    - O es infinito: QPartition lo describe como diagonales ∪ extra, todo
      lo demás en C. Las verificaciones solo tocan un conjunto inferior finito.
    - φ^{O,C}_∞(X_J) = s·∏ z_p: s aparece con exponente 1 en todo generador,
      así que phi_inf devuelve solo la parte en z y θ_∞(s) se multiplica aparte.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from pipedegen.domain.exceptions.domain_errors import CapacityError, DomainError, InvalidInputError
from pipedegen.domain.services.toric_kernel import toric_kernel_deg2
from pipedegen.domain.value_objects.deadline import Deadline
from pipedegen.domain.value_objects.permutation import Permutation
from pipedegen.domain.value_objects.polynomial import Monomial, PlueckerVariable, Polynomial, SeriesVariable
from pipedegen.domain.value_objects.q_element import QElement, QIdeal, QPartition, in_q
from pipedegen.shared.config.settings import settings
from pipedegen.shared.logging.logger import get_logger

logger = get_logger("domain.semi_infinite")

EDGE_I = "I"  # (i,j) → ⟨i+1,j⟩
EDGE_J = "J"  # (i,j) → ⟨i,j+1⟩


def _flip(edge: str) -> str:
    return EDGE_J if edge == EDGE_I else EDGE_I


def mod_k(a: int, k: int) -> int:
    """Representante de a módulo k en [1, k]."""
    return (a - 1) % k + 1


def mod_nk(a: int, n: int, k: int) -> int:
    """Representante de a módulo n−k en [k+1, n]."""
    return k + (a - k - 1) % (n - k) + 1


# ─── Poset Q ────────────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class QPoset:
    """(Q, ≺) para n ≥ 3 y 1 ≤ k < n."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3 or not 1 <= self.k < self.n:
            raise InvalidInputError(
                f"se requiere n ≥ 3 y 1 ≤ k < n (n={self.n}, k={self.k})", field="n", value=(self.n, self.k)
            )

    def contains(self, i: int, j: int) -> bool:
        return in_q(i, j, self.n, self.k)

    def element(self, i: int, j: int) -> QElement:
        if not self.contains(i, j):
            raise InvalidInputError(f"({i},{j}) no pertenece a Q", field="element", value=(i, j))
        return QElement(i, j)

    def leq(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        return (
            (p[0] <= q[0] and p[1] <= q[1])
            or q[0] - p[0] >= self.k
            or q[1] - p[1] >= self.n - self.k
        )

    def try_normalize(self, i: int, j: int) -> QElement | None:
        m = (j - i) // self.n
        ni, nj = i + m * self.k, j - m * (self.n - self.k)
        return QElement(ni, nj) if self.contains(ni, nj) else None

    def normalize(self, i: int, j: int) -> QElement:
        """⟨i,j⟩: el único trasladado (i+mk, j−m(n−k)) que cae en Q."""
        result = self.try_normalize(i, j)
        if result is None:
            raise InvalidInputError(f"⟨{i},{j}⟩ no tiene representante en Q", field="ij", value=(i, j))
        return result

    def lower_cover(self, p: QElement, edge: str) -> QElement | None:
        if edge == EDGE_I:
            return self.try_normalize(p.i - 1, p.j)
        return self.try_normalize(p.i, p.j - 1)

    def lower_covers(self, p: QElement) -> tuple[QElement, ...]:
        return tuple(c for c in (self.lower_cover(p, EDGE_I), self.lower_cover(p, EDGE_J)) if c is not None)

    def upper_covers(self, p: QElement) -> tuple[QElement, ...]:
        return (self.normalize(p.i + 1, p.j), self.normalize(p.i, p.j + 1))

    def edge_type(self, upper: QElement, lower: QElement) -> str:
        for edge in (EDGE_I, EDGE_J):
            if self.lower_cover(upper, edge) == lower:
                return edge
        raise InvalidInputError(
            f"{lower.label()} no está cubierto por {upper.label()}",
            field="edge",
            value=(tuple(upper), tuple(lower)),
        )

    def extension_key(self, p: tuple[int, int], tie: int = 1) -> tuple[int, int]:
        return ((self.n - self.k) * p[0] + self.k * p[1], tie * p[0])

    def transposition(self, p: tuple[int, int]) -> tuple[int, int]:
        return mod_k(p[0], self.k), mod_nk(p[1], self.n, self.k)


@lru_cache(maxsize=64)
def q_poset(n: int, k: int) -> QPoset:
    return QPoset(n, k)


def q_leq(p: tuple[int, int], q: tuple[int, int], n: int, k: int) -> bool:
    return q_poset(n, k).leq(p, q)


def q_normalize(i: int, j: int, n: int, k: int) -> QElement:
    return q_poset(n, k).normalize(i, j)


def q_lower_covers(p: tuple[int, int], n: int, k: int) -> tuple[QElement, ...]:
    poset = q_poset(n, k)
    return poset.lower_covers(poset.element(*p))


def q_covers(p: tuple[int, int], n: int, k: int) -> tuple[QElement, ...]:
    """Coberturas superiores de p (siempre dos)."""
    poset = q_poset(n, k)
    return poset.upper_covers(poset.element(*p))


@lru_cache(maxsize=4096)
def q_downset(p: QElement, n: int, k: int) -> frozenset[QElement]:
    """{x ∈ Q : x ⪯ p}, por búsqueda sobre coberturas inferiores."""
    poset = q_poset(n, k)
    seen = {p}
    queue = deque([p])
    while queue:
        for c in poset.lower_covers(queue.popleft()):
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return frozenset(seen)


def q_window(n: int, k: int, rows: int) -> tuple[QElement, ...]:
    """Elementos de Q con i ≤ rows."""
    return tuple(
        QElement(i, j)
        for i in range(1, rows + 1)
        for j in range(max(i, k + 1), i + n)
    )


# ─── w_M sobre Q ────────────────────────────────────────────────────────


def _validated(M: Iterable[tuple[int, int]], poset: QPoset) -> frozenset[QElement]:
    items = tuple(M)
    chosen = frozenset(poset.element(*p) for p in items)
    if len(chosen) != len(items):
        raise InvalidInputError("elementos repetidos en M", field="M", value=items)
    return chosen


def _product(chosen: Iterable[QElement], poset: QPoset, tie: int) -> Permutation:
    ordered = sorted(chosen, key=lambda p: poset.extension_key(p, tie))
    return Permutation.from_word(poset.n, (poset.transposition(p) for p in ordered))


def w_of_subset_q(
    M: Iterable[tuple[int, int]],
    n: int,
    k: int,
    debug: bool | None = None,
) -> Permutation:
    """w_M = ∏ s̃_{i,j} sobre M, con los factores ≺-menores a la izquierda."""
    poset = q_poset(n, k)
    chosen = _validated(M, poset)
    w = _product(chosen, poset, tie=1)
    recheck = debug if debug is not None else settings.debug_checks
    if recheck:
        other = _product(chosen, poset, tie=-1)
        if other != w:
            raise DomainError(f"w_M depende de la extensión lineal: {w} ≠ {other}", code="INTERNAL_CHECK")
    return w


# ─── Tuberías ───────────────────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class QPipe:
    """Tubería maximal y su valor N_M."""

    elements: tuple[QElement, ...]
    final_edge: str
    value: int

    def to_dict(self) -> dict:
        return {
            "elements": [p.to_dict() for p in self.elements],
            "final_edge": self.final_edge,
            "value": self.value,
        }


def trace_q_pipe(
    first: QElement,
    second: QElement,
    member: Callable[[QElement], bool],
    poset: QPoset,
) -> QPipe:
    """Sigue la tubería que empieza en first → second; gira en los p con member(p)."""
    edge = poset.edge_type(first, second)
    path = [first, second]
    current = second
    while True:
        edge = _flip(edge) if member(current) else edge
        following = poset.lower_cover(current, edge)
        if following is None:
            break
        path.append(following)
        current = following
    value = current.j if edge == EDGE_I else current.i
    return QPipe(tuple(path), edge, value)


def pipe_value(
    M: Iterable[tuple[int, int]],
    first: tuple[int, int],
    second: tuple[int, int],
    n: int,
    k: int,
) -> int:
    """N_M(first, second)."""
    poset = q_poset(n, k)
    chosen = _validated(M, poset)
    pipe = trace_q_pipe(poset.element(*first), poset.element(*second), chosen.__contains__, poset)
    return pipe.value


def pipe_value_failures(M: Iterable[tuple[int, int]], n: int, k: int) -> tuple[dict, ...]:
    """
    Compara, sobre una ventana de (C,D) que no están por debajo de ningún
    elemento de M, N_M((C,D),⟨C,D−1⟩) con w_M(C mod k) y
    N_M((C,D),⟨C−1,D⟩) con w_M(D mod (n−k)).
    """
    poset = q_poset(n, k)
    chosen = _validated(M, poset)
    w = w_of_subset_q(chosen, n, k)
    top = max((p.i for p in chosen), default=1)
    failures = []
    for start in q_window(n, k, top + 2 * k + n):
        if start.i <= top or any(poset.leq(start, p) for p in chosen):
            continue
        for edge, expected in ((EDGE_J, w(mod_k(start.i, k))), (EDGE_I, w(mod_nk(start.j, n, k)))):
            second = poset.lower_cover(start, edge)
            if second is None:
                continue
            got = trace_q_pipe(start, second, chosen.__contains__, poset).value
            if got != expected:
                failures.append({"start": start.to_dict(), "edge": edge, "value": got, "expected": expected})
    return tuple(failures)


# ─── r y θ_∞ ────────────────────────────────────────────────────────────


@lru_cache(maxsize=65536)
def r_q(O: QPartition, i: int, j: int) -> int:
    """r(i,j) = N_O((i,j), ⟨i−1,j⟩); r(1,j) = j y r(i,j) = j si 1 ≤ i ≤ j ≤ k."""
    if 1 <= i <= j <= O.k:
        return j
    poset = q_poset(O.n, O.k)
    start = poset.element(i, j)
    below = poset.lower_cover(start, EDGE_I)
    if below is None:
        return j
    return trace_q_pipe(start, below, O.in_order, poset).value


def r_row(O: QPartition, i: int) -> tuple[int, ...]:
    """(r(i,i), …, r(i,i+n−1)); es una permutación de [1,n]."""
    return tuple(r_q(O, i, j) for j in range(i, i + O.n))


def theta_prime(O: QPartition, p: QElement) -> SeriesVariable:
    q, a = divmod(p.i - 1, O.k)
    return SeriesVariable(a + 1, r_q(O, p.i, p.j), q)


def previous_in_order(O: QPartition, p: QElement) -> QElement | None:
    """⪯-máximo (i',j') ∈ O con (i',j') ≺ p e i' ≡ i mod k (forman una cadena)."""
    poset = q_poset(O.n, O.k)
    candidates = [
        x
        for x in q_downset(p, O.n, O.k)
        if x != p and O.in_order(x) and (x.i - p.i) % O.k == 0
    ]
    return max(candidates, key=poset.extension_key) if candidates else None


def theta_inf(O: QPartition, p: tuple[int, int]) -> Monomial:
    """θ_∞(z_p) como monomio de Laurent en las z^{(l)}_{a,b}."""
    element = q_poset(O.n, O.k).element(*p)
    head = Monomial.from_variables([theta_prime(O, element)])
    previous = previous_in_order(O, element)
    if previous is not None:
        return head / Monomial.from_variables([theta_prime(O, previous)])
    a = mod_k(element.i, O.k)
    return head / Monomial.from_variables([SeriesVariable(a, a, 0)])


def theta_inf_s(k: int) -> Monomial:
    """θ_∞(s) = z^{(0)}_{1,1} ⋯ z^{(0)}_{k,k}."""
    return Monomial.from_variables(SeriesVariable(a, a, 0) for a in range(1, k + 1))


# ─── Orden ⋖ sobre las variables en serie ───────────────────────────────


def _block_positions(O: QPartition, level: int, i: int) -> list[int]:
    """Desplazamientos t ∈ [0,n) de (kl+i, kl+i+t) en orden ⋖ ascendente."""
    row = O.k * level + i
    blocks: list[list[int]] = []
    for t in range(O.n):
        if O.is_marked(row, row + t) or not blocks:
            blocks.append([t])
        else:
            blocks[-1].append(t)
    ordered = []
    for block in blocks:
        ordered.extend(block[1:])
        ordered.append(block[0])
    return ordered


@dataclass(frozen=True, slots=True)
class SeriesOrder:
    """Orden revlex ⋖ sobre z^{(l)}_{i,j} con l ≤ level_cap."""

    n: int
    k: int
    level_cap: int
    ascending: tuple[SeriesVariable, ...]
    rank: dict = field(hash=False, compare=False, repr=False)

    def rank_of(self, var: SeriesVariable) -> int:
        if var.l > self.level_cap:
            raise CapacityError(
                f"nivel {var.l} por encima del tope {self.level_cap}", limit=self.level_cap, requested=var.l
            )
        return self.rank[var]

    def key(self, mono: Monomial) -> tuple[int, ...]:
        """M₁ ⋖ M₂ ⇔ key(M₁) < key(M₂): gana quien tenga menos de la variable mínima."""
        exps = mono.as_dict()
        for var in exps:
            self.rank_of(var)
        return tuple(-exps.get(v, 0) for v in self.ascending)

    def initial_term(self, p: Polynomial) -> tuple[Monomial, int]:
        if p.is_zero:
            raise InvalidInputError("el polinomio cero no tiene término inicial", field="polynomial")
        return max(p, key=lambda term: self.key(term[0]))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "level_cap": self.level_cap,
            "ascending": [v.label() for v in self.ascending],
        }


@lru_cache(maxsize=256)
def series_var_order(O: QPartition, level_cap: int) -> SeriesOrder:
    if level_cap < 0:
        raise InvalidInputError("el tope de niveles debe ser ≥ 0", field="level_cap", value=level_cap)
    ascending = []
    for level in range(level_cap + 1):
        for i in range(1, O.k + 1):
            row = O.k * level + i
            for t in _block_positions(O, level, i):
                ascending.append(SeriesVariable(i, r_q(O, row, row + t), level))
    return SeriesOrder(
        O.n, O.k, level_cap, tuple(ascending), {v: idx for idx, v in enumerate(ascending)}
    )


# ─── Menores en series ──────────────────────────────────────────────────


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        edges = (-1, *bars, total + parts - 1)
        yield tuple(b - a - 1 for a, b in zip(edges, edges[1:]))


@lru_cache(maxsize=8192)
def d_coeff(indices: tuple[int, ...], level: int, n: int, level_cap: int | None = None) -> Polynomial:
    """
    Coeficiente de t^level del menor de (z_{i,j}(t)) en las filas 1..k y las
    columnas `indices` en ese orden (desordenadas: (−1)^σ D^{(l)}_S).
    """
    cap = level_cap if level_cap is not None else settings.semiinf_d_max + 1
    if level > cap:
        raise CapacityError(f"nivel {level} por encima del tope {cap}", limit=cap, requested=level)
    indices = tuple(indices)
    k = len(indices)
    if not 1 <= k <= n - 1 or len(set(indices)) != k or any(not 1 <= j <= n for j in indices):
        raise InvalidInputError(f"columnas inválidas {indices} para n={n}", field="indices", value=indices)
    if level < 0:
        raise InvalidInputError("nivel negativo", field="level", value=level)
    terms = []
    for perm in itertools.permutations(range(k)):
        sign = Permutation(tuple(p + 1 for p in perm)).sign()
        for levels in _compositions(level, k):
            mono = Monomial.from_variables(
                SeriesVariable(row + 1, indices[perm[row]], levels[row]) for row in range(k)
            )
            terms.append((mono, sign))
    return Polynomial.from_terms(terms)


# ─── Ideales finitos y ψ_∞ ──────────────────────────────────────────────


def _truncated_support(poset: QPoset, d_max: int) -> tuple[QElement, ...]:
    """F = {q ∈ Q : q ⋡ (k+D+1, k+D+1)}, en orden de extensión lineal."""
    top = (poset.k + d_max + 1, poset.k + d_max + 1)
    start = QElement(1, poset.k + 1)
    seen = {start}
    queue = deque([start])
    while queue:
        for c in poset.upper_covers(queue.popleft()):
            if c not in seen and not poset.leq(top, c):
                seen.add(c)
                queue.append(c)
    return tuple(sorted(seen, key=poset.extension_key))


def enumerate_q_ideals(
    n: int,
    k: int,
    d_max: int | None = None,
    deadline: Deadline | None = None,
) -> tuple[QIdeal, ...]:
    """Todos los ideales finitos J de Q con d(J) ≤ D, ordenados por (d, |J|, miembros)."""
    bound = d_max if d_max is not None else settings.semiinf_d_max
    if bound < 0:
        raise InvalidInputError("la cota D debe ser ≥ 0", field="d_max", value=bound)
    poset = q_poset(n, k)
    support = _truncated_support(poset, bound)
    found: list[QIdeal] = []

    def extend(idx: int, chosen: frozenset[QElement]) -> None:
        if idx == len(support):
            found.append(QIdeal(n, k, chosen))
            return
        if deadline is not None:
            deadline.check("enumerate_q_ideals", partial={"ideals": len(found)})
        extend(idx + 1, chosen)
        p = support[idx]
        if all(c in chosen for c in poset.lower_covers(p)):
            extend(idx + 1, chosen | {p})

    extend(0, frozenset())
    return tuple(sorted(found, key=lambda J: (J.d, len(J.members), J.sorted_members())))


def maximal_q_elements(J: QIdeal) -> frozenset[QElement]:
    poset = q_poset(J.n, J.k)
    return frozenset(p for p in J.members if not any(c in J.members for c in poset.upper_covers(p)))


def m_oc_q(J: QIdeal, O: QPartition) -> frozenset[QElement]:
    """M_{O,C}(J) = (J ∩ O) ∪ max J."""
    return frozenset(p for p in J.members if O.in_order(p)) | maximal_q_elements(J)


def _check_bound(J: QIdeal, d_max: int | None) -> None:
    bound = d_max if d_max is not None else settings.semiinf_d_max
    if J.d > bound:
        raise CapacityError(f"d(J)={J.d} supera la cota D={bound}", limit=bound, requested=J.d)


def psi_columns_inf(J: QIdeal, O: QPartition, d_max: int | None = None) -> tuple[int, ...]:
    """(w^J(1), …, w^J(k))."""
    _check_bound(J, d_max)
    w = w_of_subset_q(m_oc_q(J, O), O.n, O.k)
    return tuple(w(a) for a in range(1, O.k + 1))


def psi_inf(J: QIdeal, O: QPartition, d_max: int | None = None) -> tuple[PlueckerVariable, int]:
    """ψ_∞(X_J) = X^{(d(J))}_{w^J(1),…,w^J(k)} = signo · X^{(d(J))}_{ordenado}."""
    return PlueckerVariable.from_unsorted(psi_columns_inf(J, O, d_max), level=J.d)


def phi_inf(J: QIdeal, O: QPartition) -> Monomial:
    """Parte en z de φ^{O,C}_∞(X_J) = s·∏_{p ∈ M_{O,C}(J)} z_p."""
    return Monomial.from_variables(sorted(m_oc_q(J, O)))


def theta_phi_inf(J: QIdeal, O: QPartition) -> Monomial:
    """θ_∞(φ^{O,C}_∞(X_J))."""
    image = theta_inf_s(O.k)
    for p in sorted(m_oc_q(J, O)):
        image = image * theta_inf(O, p)
    return image


def expected_initial_inf(columns: Sequence[int], d: int, k: int) -> Monomial:
    """z^{(q)}_{l+1,w(l+1)} ⋯ z^{(q)}_{k,w(k)} · z^{(q+1)}_{1,w(1)} ⋯ z^{(q+1)}_{l,w(l)}, d = qk + l."""
    q, l = divmod(d, k)
    return Monomial.from_variables(
        SeriesVariable(a, columns[a - 1], q + 1 if a <= l else q) for a in range(1, k + 1)
    )


# ─── Verificación truncada ──────────────────────────────────────────────


@dataclass(frozen=True, slots=True)
class QGeneratorCheck:
    ideal: QIdeal
    columns: tuple[int, ...]
    pluecker: PlueckerVariable
    psi_sign: int
    expected: Monomial
    initial: Monomial
    initial_coefficient: int
    theta_image: Monomial

    @property
    def initial_matches(self) -> bool:
        return self.initial == self.expected

    @property
    def square_commutes(self) -> bool:
        return self.theta_image == self.initial

    @property
    def passed(self) -> bool:
        return self.initial_matches and self.square_commutes

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.label(),
            "level": self.ideal.d,
            "psi": self.pluecker.label(),
            "psi_sign": self.psi_sign,
            "initial": self.initial.label(),
            "initial_coefficient": self.initial_coefficient,
            "expected": self.expected.label(),
            "theta_image": self.theta_image.label(),
            "passed": self.passed,
        }


def check_q_generator(J: QIdeal, O: QPartition, order: SeriesOrder, d_max: int | None = None) -> QGeneratorCheck:
    columns = psi_columns_inf(J, O, d_max)
    variable, sign = PlueckerVariable.from_unsorted(columns, level=J.d)
    initial, coef = order.initial_term(d_coeff(columns, J.d, O.n, order.level_cap))
    return QGeneratorCheck(
        ideal=J,
        columns=columns,
        pluecker=variable,
        psi_sign=sign,
        expected=expected_initial_inf(columns, J.d, O.k),
        initial=initial,
        initial_coefficient=coef,
        theta_image=theta_phi_inf(J, O),
    )


@dataclass(slots=True)
class SemiInfiniteCertificate:
    partition: QPartition
    d_max: int
    level_counts: dict[int, int]
    level_distinct: dict[int, int]
    expected_per_level: int
    rows_are_permutations: bool
    kernel_agrees: bool
    generators: tuple[QGeneratorCheck, ...] = ()

    @property
    def bijective(self) -> bool:
        return all(
            self.level_counts.get(m, 0) == self.level_distinct.get(m, 0) == self.expected_per_level
            for m in range(self.d_max + 1)
        )

    @property
    def passed(self) -> bool:
        return (
            self.bijective
            and self.rows_are_permutations
            and self.kernel_agrees
            and all(c.passed for c in self.generators)
        )

    def to_dict(self) -> dict:
        return {
            "partition": self.partition.to_dict(),
            "d_max": self.d_max,
            "level_counts": {str(m): c for m, c in sorted(self.level_counts.items())},
            "level_distinct": {str(m): c for m, c in sorted(self.level_distinct.items())},
            "expected_per_level": self.expected_per_level,
            "bijective": self.bijective,
            "rows_are_permutations": self.rows_are_permutations,
            "kernel_agrees": self.kernel_agrees,
            "generators": [c.to_dict() for c in self.generators],
            "passed": self.passed,
        }


def _kernel_agrees(O: QPartition, ideals: Sequence[QIdeal], order: SeriesOrder, d_max: int) -> bool:
    transported: dict[PlueckerVariable, tuple[int, Monomial]] = {}
    for J in ideals:
        variable, sign = psi_inf(J, O, d_max)
        if variable in transported:
            return False
        transported[variable] = (sign, phi_inf(J, O))
    initial = {}
    for variable in transported:
        mono, coef = order.initial_term(d_coeff(variable.indices, variable.level, O.n, order.level_cap))
        initial[variable] = (coef, mono)
    return toric_kernel_deg2(transported, transported, same_group=True) == toric_kernel_deg2(
        initial, initial, same_group=True
    )


def verify_semi_infinite(
    O: QPartition,
    d_max: int | None = None,
    deadline: Deadline | None = None,
) -> SemiInfiniteCertificate:
    """Teorema de degeneración truncado a d(J) ≤ D para la partición O."""
    bound = d_max if d_max is not None else settings.semiinf_d_max
    order = series_var_order(O, bound + 1)
    ideals = enumerate_q_ideals(O.n, O.k, bound, deadline)

    counts: dict[int, int] = {}
    images: dict[int, set[PlueckerVariable]] = {}
    checks = []
    for done, J in enumerate(ideals):
        if deadline is not None:
            deadline.check("verify_semi_infinite", partial={"ideals_done": done})
        check = check_q_generator(J, O, order, bound)
        checks.append(check)
        counts[J.d] = counts.get(J.d, 0) + 1
        images.setdefault(J.d, set()).add(check.pluecker)

    rows = O.k * (bound + 2)
    rows_ok = all(sorted(r_row(O, i)) == list(range(1, O.n + 1)) for i in range(1, rows + 1))
    certificate = SemiInfiniteCertificate(
        partition=O,
        d_max=bound,
        level_counts=counts,
        level_distinct={m: len(v) for m, v in images.items()},
        expected_per_level=math.comb(O.n, O.k),
        rows_are_permutations=rows_ok,
        kernel_agrees=_kernel_agrees(O, ideals, order, bound),
        generators=tuple(checks),
    )
    failed = [c for c in checks if not c.passed]
    if failed:
        logger.error(f"semi-infinito n={O.n} k={O.k}: {len(failed)} generadores fallan")
    else:
        logger.debug(f"semi-infinito n={O.n} k={O.k} D={bound}: {len(checks)} generadores verificados")
    return certificate

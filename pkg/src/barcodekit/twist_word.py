"""Obstruction certificates for words in two Dehn twists.

Letters ``A`` and ``B`` stand for the twists about two Lagrangian spheres
``L`` and ``L'``.  A word is written left to right and acts right to left, so
``"B^2 A^1"`` is ``τ_{L'}^2 τ_L^1``.  Floer ranks enter only as hypotheses:
``hf(L, L') = h`` and ``hf(S, S) = 2`` for either sphere.

A certificate is a chain of rank relations ``hf(P, X) rel hf(Q, X)`` where
``X`` is a suffix of the word applied to a base sphere.  Every step cites one
rule:

``base-rank``
    a relation read off the base ranks (a twist about ``S`` fixes ``S``, so
    such syllables may precede the base sphere); also the closing step, which
    contradicts a transported relation.
``twist-seed``
    ``hf(S, τ_S^k T) < hf(T, τ_S^k T)`` for the two distinct spheres ``S, T``
    and ``k != 0``.
``rank-flip``
    from ``hf(S, X) > hf(T, X)`` infer ``hf(S, τ_S^k X) < hf(T, τ_S^k X)``,
    ``k != 0``.
``path-invariance``
    if the whole word were isotopic to the identity, both barcodes
    ``B(S, ψX)`` would be joined by continuous paths to ``B(S, X)``, keeping
    their numbers of semi-infinite bars; so a relation about ``ψX`` holds
    about ``X`` itself.

The last two rules need ``h >= 2`` and, when ``h == 2``, spheres that are not
quasi-isomorphic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

L, LP = "L", "L'"
SPHERE = {"A": L, "B": LP}
LETTER = {L: "A", LP: "B"}
OTHER = {L: LP, LP: L}
SPHERE_SELF_RANK = 2

BASE, SEED, FLIP, TRANSPORT = "base-rank", "twist-seed", "rank-flip", "path-invariance"
NOT_IDENTITY = "not in the identity component of the C⁰ symplectic mapping class group"
INCONCLUSIVE = "inconclusive"

_TOKEN = re.compile(r"^([AB])\^([+-]?\d+)$")


class WordSyntaxError(ValueError):
    pass


class HypothesisRefused(ValueError):
    pass


# ---------------------------------------------------------------------------
# words


def free_reduce(syllables) -> tuple:
    stack: list = []
    for letter, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == letter:
            total = stack[-1][1] + exp
            stack.pop()
            if total:
                stack.append((letter, total))
        else:
            stack.append((letter, exp))
    return tuple(stack)


@dataclass(frozen=True)
class TwistWord:
    """Freely reduced word; the empty word is the identity."""

    syllables: tuple = ()

    def __post_init__(self):
        for i, (letter, exp) in enumerate(self.syllables):
            if letter not in SPHERE or not isinstance(exp, int) or exp == 0:
                raise ValueError(f"bad syllable {(letter, exp)!r}")
            if i and self.syllables[i - 1][0] == letter:
                raise ValueError("adjacent syllables must use different letters")

    @property
    def is_trivial(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return " ".join(f"{a}^{k}" for a, k in self.syllables) if self.syllables else "1"

    def mirrored(self) -> "TwistWord":
        return TwistWord(tuple(("B" if a == "A" else "A", k) for a, k in self.syllables))


def parse_and_reduce(text: str) -> TwistWord:
    """Parse ``"A^2 B^-1 ..."`` and reduce freely."""
    syllables = []
    for pos, token in enumerate(text.split()):
        match = _TOKEN.match(token)
        if match is None:
            raise WordSyntaxError(f"token {pos + 1} ({token!r}) is not of the form A^<int> or B^<int>")
        syllables.append((match.group(1), int(match.group(2))))
    return TwistWord(free_reduce(syllables))


def _as_word(word: Union[TwistWord, str]) -> TwistWord:
    return parse_and_reduce(word) if isinstance(word, str) else word


def twist_name(sphere: str) -> str:
    return "τ_L" if sphere == L else "τ_{L'}"


# ---------------------------------------------------------------------------
# hypotheses


@dataclass(frozen=True)
class RankHypotheses:
    hf_LLp: int
    quasi_isomorphic: bool = False

    def rank(self, probe: str, base: str) -> int:
        return SPHERE_SELF_RANK if probe == base else self.hf_LLp

    def problem(self) -> Optional[str]:
        if not isinstance(self.hf_LLp, int) or self.hf_LLp < 0:
            return "hf(L,L') must be a non-negative integer"
        if self.hf_LLp < 2:
            return f"hf(L,L') = {self.hf_LLp} < 2: the rank inequalities need hf(L,L') >= 2"
        if self.hf_LLp == 2 and self.quasi_isomorphic:
            return "hf(L,L') = 2 with L and L' quasi-isomorphic: no rank inequality is available"
        return None

    def __str__(self) -> str:
        return f"hf(L,L') = {self.hf_LLp}, quasi_isomorphic = {str(self.quasi_isomorphic).lower()}"


_TRUE = {"true", "yes", "1"}
_FALSE = {"false", "no", "0"}


def parse_hypotheses(text: str) -> RankHypotheses:
    from .barcode import FormatError

    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep:
            raise FormatError(f"expected '<key> = <value>', got {line!r}", lineno)
        if key == "hf_LL'":
            try:
                values[key] = int(value)
            except ValueError:
                raise FormatError(f"hf_LL' must be an integer, got {value!r}", lineno) from None
        elif key == "quasi_isomorphic":
            if value.lower() not in _TRUE | _FALSE:
                raise FormatError(f"quasi_isomorphic must be true or false, got {value!r}", lineno)
            values[key] = value.lower() in _TRUE
        else:
            raise FormatError(f"unknown key {key!r}", lineno)
    if "hf_LL'" not in values:
        raise FormatError("missing 'hf_LL' = <int>' line")
    return RankHypotheses(values["hf_LL'"], values.get("quasi_isomorphic", False))


# ---------------------------------------------------------------------------
# certificates


_FLIPPED = {"<": ">", ">": "<", "=": "="}


@dataclass(frozen=True)
class RankRelation:
    """``hf(left, ψ target) rel hf(right, ψ target)`` with ``ψ`` = ``applied``."""

    left: str
    rel: str
    right: str
    applied: tuple
    target: str

    def oriented(self) -> tuple:
        """``(greater, lesser)`` for a strict relation, else None."""
        if self.rel == ">":
            return self.left, self.right
        if self.rel == "<":
            return self.right, self.left
        return None

    def object_text(self) -> str:
        twists = [f"{twist_name(SPHERE[a])}^{k}" for a, k in self.applied]
        return " ".join(twists + [self.target])

    def __str__(self) -> str:
        obj = self.object_text()
        return f"hf({self.left}, {obj}) {self.rel} hf({self.right}, {obj})"

    def sigma_text(self, end: str) -> str:
        """Same relation between ``σ^∞(B'_end)`` (probe L') and ``σ^∞(B_end)`` (probe L)."""
        rel = self.rel if self.left == LP else _FLIPPED[self.rel]
        return f"σ^∞(B'_{end}) {rel} σ^∞(B_{end})"

    def mirrored(self) -> "RankRelation":
        return RankRelation(
            OTHER[self.left], self.rel, OTHER[self.right],
            TwistWord(self.applied).mirrored().syllables, OTHER[self.target],
        )


@dataclass(frozen=True)
class Step:
    rule: str
    fact: RankRelation
    premise: Optional[int] = None

    def mirrored(self) -> "Step":
        return Step(self.rule, self.fact.mirrored(), self.premise)


@dataclass(frozen=True)
class ObstructionCertificate:
    word: TwistWord
    hypotheses: RankHypotheses
    target: Optional[str]
    seeding: Optional[str]
    steps: tuple
    conclusion: str

    def mirrored(self) -> "ObstructionCertificate":
        return ObstructionCertificate(
            self.word.mirrored(), self.hypotheses,
            OTHER[self.target] if self.target else None, self.seeding,
            tuple(s.mirrored() for s in self.steps), self.conclusion,
        )

    def to_text(self) -> str:
        lines = [f"word: {self.word}", f"hypotheses: {self.hypotheses}"]
        if not self.steps:
            lines.append(f"conclusion: {self.conclusion}")
            return "\n".join(lines) + "\n"
        x = self.target
        lines.append(
            f"target: {x}  (B'_t: B(L', ψ_t {x}) and B_t: B(L, ψ_t {x}), "
            f"ψ_0 = id, ψ_1 = ψ = {self.word})"
        )
        lines.append(f"seeding: {self.seeding}")
        for n, step in enumerate(self.steps, start=1):
            src = "" if step.premise is None else f" (from {step.premise + 1})"
            lines.append(f"{n}. [{step.rule}]{src} {self._describe(step)}")
        lines.append(f"conclusion: {self.word} is {self.conclusion}")
        return "\n".join(lines) + "\n"

    def _describe(self, step: Step) -> str:
        fact = step.fact
        if step.rule == TRANSPORT:
            return (f"{fact.sigma_text('1')} carries over to {fact.sigma_text('0')}, "
                    f"i.e. {fact}")
        if step.rule == BASE and step.premise is not None:
            premise = self.steps[step.premise].fact
            h = self.hypotheses
            vp, v = h.rank(LP, fact.target), h.rank(L, fact.target)
            values = f"{vp}" if vp == v else f"{vp} {'>' if vp > v else '<'} {v}"
            return f"{premise.sigma_text('0')} contradicts σ^∞(B'_0) = {values} = σ^∞(B_0)"
        return str(fact)


def _seeding_plan(word: TwistWord, h: int) -> tuple:
    """Target sphere and seeding rule for a non-trivial word.

    The target is the sphere fixed by the first twist applied when the word
    has an even number of syllables, and the other sphere otherwise; with
    ``h > 2`` this makes the number of rank flips odd, so the transported
    relation is reversed with respect to the base ranks.
    """
    first = SPHERE[word.syllables[-1][0]]
    fixes_first = len(word) % 2 == 0
    target = first if fixes_first else OTHER[first]
    rule = BASE if h > SPHERE_SELF_RANK else SEED
    seeding = f"{rule} after a twist fixing the target" if fixes_first else rule
    return target, rule, fixes_first, seeding


def derive_obstruction(word: Union[TwistWord, str], hypotheses: RankHypotheses) -> ObstructionCertificate:
    """Certificate that ``word`` is not isotopic to the identity (C⁰ class).

    Raises :class:`HypothesisRefused` when the hypotheses do not support the
    rank inequalities.  The trivial word yields an inconclusive certificate.
    """
    word = _as_word(word)
    problem = hypotheses.problem()
    if problem is not None:
        raise HypothesisRefused(problem)
    if word.is_trivial:
        return ObstructionCertificate(word, hypotheses, None, None, (), INCONCLUSIVE)

    h = hypotheses.hf_LLp
    syl = word.syllables
    n = len(syl)
    target, rule, fixes_first, seeding = _seeding_plan(word, h)
    steps = []

    if rule == BASE:
        if fixes_first:
            used = 1  # τ_S^a S = S; the other sphere has the larger rank
            fact = RankRelation(OTHER[target], ">", target, syl[n - 1:], target)
        else:
            used = 0
            fact = RankRelation(OTHER[target], ">", target, (), target)
    else:
        used = 2 if fixes_first else 1
        twisting = SPHERE[syl[n - used][0]]
        fact = RankRelation(twisting, "<", OTHER[twisting], syl[n - used:], target)
    steps.append(Step(rule, fact))

    for i in range(n - used - 1, -1, -1):
        letter, k = syl[i]
        greater, lesser = steps[-1].fact.oriented()
        if SPHERE[letter] != greater:  # pragma: no cover - alternation guarantees this
            raise AssertionError("twist about the smaller-rank sphere")
        fact = RankRelation(greater, "<", lesser, syl[i:], target)
        steps.append(Step(FLIP, fact, len(steps) - 1))

    last = steps[-1].fact
    steps.append(Step(TRANSPORT, RankRelation(last.left, last.rel, last.right, (), target),
                      len(steps) - 1))
    transported = steps[-1].fact
    base = _base_relation(transported.left, transported.right, target, hypotheses)
    if _compatible(transported.rel, base.rel):  # pragma: no cover
        raise AssertionError("derivation ended without a contradiction")
    steps.append(Step(BASE, base, len(steps) - 1))
    return ObstructionCertificate(word, hypotheses, target, seeding, tuple(steps), NOT_IDENTITY)


def _base_relation(left: str, right: str, target: str, h: RankHypotheses) -> RankRelation:
    a, b = h.rank(left, target), h.rank(right, target)
    rel = "=" if a == b else (">" if a > b else "<")
    return RankRelation(left, rel, right, (), target)


def _compatible(rel1: str, rel2: str) -> bool:
    return rel1 == rel2


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class Verdict:
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "certificate verified"
        where = "" if self.step is None else f" at step {self.step + 1}"
        return f"certificate rejected{where}: {self.reason}"


def _fixes(applied: tuple, sphere: str) -> bool:
    return all(SPHERE[a] == sphere for a, _ in applied)


def _is_suffix(applied: tuple, word: TwistWord) -> bool:
    return not applied or word.syllables[len(word) - len(applied):] == applied


def _holds(rel: str, a: int, b: int) -> bool:
    return {"<": a < b, ">": a > b, "=": a == b}.get(rel, False)


def _check_step(index: int, step: Step, steps: tuple, word: TwistWord,
                h: RankHypotheses, target: str) -> Optional[str]:
    fact = step.fact
    if fact.target != target:
        return "relation is about a different base sphere"
    if {fact.left, fact.right} != {L, LP}:
        return "relation must compare hf against L and against L'"
    if fact.rel not in ("<", ">", "="):
        return f"unknown relation {fact.rel!r}"
    if not _is_suffix(fact.applied, word):
        return "twisted object is not a suffix of the word"
    premise = None
    if step.premise is not None:
        if not 0 <= step.premise < index:
            return "premise must be an earlier step"
        premise = steps[step.premise].fact

    if step.rule == BASE and premise is None:
        if not _fixes(fact.applied, target):
            return "base ranks only apply to twists fixing the base sphere"
        if not _holds(fact.rel, h.rank(fact.left, target), h.rank(fact.right, target)):
            return "relation is false for the base ranks"
        return None
    if step.rule == BASE:
        if index != len(steps) - 1:
            return "a contradiction must close the certificate"
        if steps[step.premise].rule != TRANSPORT:
            return "only a transported relation can be contradicted"
        if fact.applied:
            return "base ranks only apply to the untwisted sphere"
        if not _holds(fact.rel, h.rank(fact.left, target), h.rank(fact.right, target)):
            return "relation is false for the base ranks"
        same_order = (premise.left, premise.right) == (fact.left, fact.right)
        premise_rel = premise.rel if same_order else _FLIPPED[premise.rel]
        if _compatible(premise_rel, fact.rel):
            return "no contradiction with the base ranks"
        return None
    if step.rule == SEED:
        if premise is not None:
            return "twist-seed takes no premise"
        if not fact.applied:
            return "twist-seed needs a twist"
        twisting = SPHERE[fact.applied[0][0]]
        if not _fixes(fact.applied[1:], OTHER[twisting]) or target != OTHER[twisting]:
            return "twist-seed applies to a twist about one sphere of the other sphere"
        if fact.oriented() != (OTHER[twisting], twisting):
            return "twist-seed gives hf(S, τ_S^k T) < hf(T, τ_S^k T)"
        return None
    if step.rule == FLIP:
        if premise is None:
            return "rank-flip needs a premise"
        order = premise.oriented()
        if order is None:
            return "rank-flip needs a strict premise"
        greater, lesser = order
        if len(fact.applied) != len(premise.applied) + 1 or fact.applied[1:] != premise.applied:
            return "rank-flip applies exactly one twist to the premise's object"
        if SPHERE[fact.applied[0][0]] != greater:
            return "rank-flip twists about the sphere with the larger rank"
        if fact.oriented() != (lesser, greater):
            return "rank-flip reverses the inequality"
        return None
    if step.rule == TRANSPORT:
        if premise is None:
            return "path-invariance needs a premise"
        if premise.applied != word.syllables:
            return "path-invariance needs a relation about the whole word"
        if fact.applied or (fact.left, fact.rel, fact.right) != (premise.left, premise.rel, premise.right):
            return "path-invariance keeps the relation and removes the word"
        return None
    return f"unknown rule {step.rule!r}"


def verify_certificate(cert: ObstructionCertificate, word: Union[TwistWord, str],
                       hypotheses: RankHypotheses) -> Verdict:
    """Replay ``cert`` against the rules, ``word`` and ``hypotheses``."""
    word = _as_word(word)
    problem = hypotheses.problem()
    if problem is not None:
        return Verdict(False, None, f"hypotheses refused: {problem}")
    if cert.word != word:
        return Verdict(False, None, "certificate is about a different word")
    if cert.hypotheses != hypotheses:
        return Verdict(False, None, "certificate uses different hypotheses")
    if cert.conclusion == INCONCLUSIVE:
        return Verdict(not cert.steps, None, "" if not cert.steps else "inconclusive certificate with steps")
    if cert.conclusion != NOT_IDENTITY:
        return Verdict(False, None, f"unknown conclusion {cert.conclusion!r}")
    if not cert.steps or cert.target not in (L, LP):
        return Verdict(False, None, "no derivation")
    for index, step in enumerate(cert.steps):
        reason = _check_step(index, step, cert.steps, word, hypotheses, cert.target)
        if reason is not None:
            return Verdict(False, index, reason)
    last = cert.steps[-1]
    if last.rule != BASE or last.premise is None:
        return Verdict(False, len(cert.steps) - 1, "certificate does not end in a contradiction")
    return Verdict(True)


# ---------------------------------------------------------------------------
# bundled ranks from the A2 Milnor fibre: three spheres L0, L1, L2

A2_RANKS = {("L0", "L1"): 2, ("L0", "L2"): 1, ("L1", "L2"): 3}


def a2_hypotheses(first: str, second: str) -> RankHypotheses:
    """Hypotheses for the pair ``(first, second)`` of the A2 configuration."""
    key = tuple(sorted((first, second)))
    if key not in A2_RANKS:
        raise KeyError(f"no A2 rank for the pair {first}, {second}")
    return RankHypotheses(A2_RANKS[key], quasi_isomorphic=False)

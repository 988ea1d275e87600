"""Graded coverings of superdomains and supermanifold atlases.

The covering of a superdomain with coordinates (x_i, xi_j) replaces each
commuting coordinate by one graded copy x_i@g per even-parity weight g
and each anticommuting one by a copy per odd-parity weight, and projects
by sending every coordinate to the sum of its copies.  Morphisms between
superdomains lift uniquely to the coverings, and lifting an atlas chart
by chart turns a supermanifold atlas into a graded one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import GradedSignature, SuperRational, SuperSignature
from .errors import CoveringError, GradedError, SignatureMismatchError
from .expressions import format_expression
from .groups import Character, FiniteAbelianGroup, ParityMap
from .morphisms import GradedMorphism, SuperMorphism, compose


def graded_copy_name(base: str, weight: Character) -> str:
    return f"{base}@({','.join(str(r) for r in weight.residues)})"


def covering_signature(
    signature: SuperSignature, group: FiniteAbelianGroup, parity: ParityMap
) -> GradedSignature:
    """One graded copy of every coordinate per weight of matching parity."""
    if parity.group != group:
        raise ValueError("parity map belongs to a different group")
    even_weights = [chi for chi in group.characters() if parity(chi) == 0]
    odd_weights = [chi for chi in group.characters() if parity(chi) == 1]
    if signature.odd and not odd_weights:
        raise CoveringError(
            "no odd-parity weights exist, so the anticommuting coordinates "
            f"{list(signature.odd)} would have no graded copies"
        )
    even = [
        (graded_copy_name(name, chi), chi)
        for name in signature.even
        for chi in even_weights
    ]
    odd = [
        (graded_copy_name(name, chi), chi)
        for name in signature.odd
        for chi in odd_weights
    ]
    return GradedSignature(group, parity, even, odd)


def covering_map(
    signature: SuperSignature, group: FiniteAbelianGroup, parity: ParityMap
) -> SuperMorphism:
    """The projection: each coordinate pulls back to the sum of its copies."""
    cover = covering_signature(signature, group, parity)
    images = {}
    for name in signature.even:
        total = SuperRational.zero(cover)
        for chi in group.characters():
            if parity(chi) == 0:
                total = total + SuperRational.variable(cover, graded_copy_name(name, chi))
        images[name] = total
    for name in signature.odd:
        total = SuperRational.zero(cover)
        for chi in group.characters():
            if parity(chi) == 1:
                total = total + SuperRational.variable(cover, graded_copy_name(name, chi))
        images[name] = total
    return SuperMorphism(cover, signature, images)


def lift_mixed(phi: SuperMorphism) -> GradedMorphism:
    """Lift a morphism from a graded domain into a superdomain.

    The image of the graded copy y@g is the weight-g component of the
    image of y; the lift is the unique graded morphism through which phi
    factors via the covering projection.
    """
    source = phi.source
    if not isinstance(source, GradedSignature):
        raise TypeError("the morphism must start from a graded domain")
    cover = covering_signature(source_super(phi.target), source.group, source.parity)
    images: dict[str, SuperRational] = {}
    for name in phi.target.even + phi.target.odd:
        components = phi.images[name].decompose()
        for chi in source.group.characters():
            copy = graded_copy_name(name, chi)
            if copy in cover.even or copy in cover.odd:
                images[copy] = components.get(chi, SuperRational.zero(source))
    return GradedMorphism(source, cover, images)


def source_super(signature: SuperSignature) -> SuperSignature:
    """The underlying plain signature (drops grading data if present)."""
    if type(signature) is SuperSignature:
        return signature
    return SuperSignature(signature.even, signature.odd)


def lift_super(
    psi: SuperMorphism, group: FiniteAbelianGroup, parity: ParityMap
) -> GradedMorphism:
    """Lift a morphism of superdomains to the graded coverings.

    Built as the lift of psi composed with the source covering projection;
    the lifted morphism makes the covering square commute exactly.
    """
    projection = covering_map(psi.source, group, parity)
    try:
        mixed = compose(psi, projection)
    except GradedError as exc:
        raise CoveringError(
            f"the morphism is singular along the covering: {exc}"
        ) from exc
    return lift_mixed(mixed)


# -- atlases ------------------------------------------------------------


@dataclass
class Atlas:
    """Charts plus transition morphisms between them.

    ``transitions[(a, b)]`` maps chart ``a`` into chart ``b``: its images
    express the coordinates of ``b`` over the coordinates of ``a``.
    """

    charts: dict[str, SuperSignature]
    transitions: dict[tuple[str, str], SuperMorphism] = field(default_factory=dict)

    def __post_init__(self):
        for (src, dst), morphism in self.transitions.items():
            if src not in self.charts or dst not in self.charts:
                raise ValueError(f"transition {src}->{dst} names an unknown chart")
            if morphism.source != self.charts[src] or morphism.target != self.charts[dst]:
                raise SignatureMismatchError(
                    f"transition {src}->{dst} does not match its chart signatures"
                )


@dataclass
class CocycleFailure:
    kind: str  # "missing-reverse" | "pair" | "triple" | "singular"
    charts: tuple[str, ...]
    detail: str
    residual: dict[str, str] = field(default_factory=dict)

    def describe(self) -> str:
        chain = "->".join(self.charts)
        text = f"{self.kind} on ({chain}): {self.detail}"
        for var, expr in sorted(self.residual.items()):
            text += f"\n    {var} = {expr}"
        return text


@dataclass
class CocycleReport:
    ok: bool
    failures: list[CocycleFailure]
    note: str = (
        "identities checked as formal rational identities, ignoring overlap domains"
    )

    def describe(self) -> str:
        if self.ok:
            return f"cocycle check passed ({self.note})"
        lines = [f"cocycle check FAILED ({self.note})"]
        lines.extend("  " + f.describe() for f in self.failures)
        return "\n".join(lines)


def _residual(morphism: SuperMorphism) -> dict[str, str]:
    sig = morphism.source
    out = {}
    for name in sig.even + sig.odd:
        img = morphism.images[name]
        if img != SuperRational.variable(sig, name):
            out[name] = format_expression(img)
    return out


def check_cocycle(atlas: Atlas) -> CocycleReport:
    """Verify that transitions invert pairwise and close on triples."""
    failures: list[CocycleFailure] = []

    def chained(chain: tuple[str, ...]):
        """Composite along consecutive chart ids, or None on singularity."""
        try:
            total = None
            for src, dst in zip(chain, chain[1:]):
                leg = atlas.transitions[(src, dst)]
                total = leg if total is None else compose(leg, total)
            return total
        except GradedError as exc:
            failures.append(
                CocycleFailure("singular", chain, f"composition undefined: {exc}")
            )
            return None

    for a, b in sorted(atlas.transitions):
        if (b, a) not in atlas.transitions:
            failures.append(
                CocycleFailure(
                    "missing-reverse", (a, b), f"no transition {b}->{a} declared"
                )
            )

    for a, b in sorted(atlas.transitions):
        if a >= b or (b, a) not in atlas.transitions:
            continue
        for chain in ((a, b, a), (b, a, b)):
            comp = chained(chain)
            if comp is not None and not comp.is_identity():
                failures.append(
                    CocycleFailure(
                        "pair",
                        (chain[0], chain[1]),
                        "round trip is not the identity",
                        _residual(comp),
                    )
                )

    ids = sorted(atlas.charts)
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            for k in range(j + 1, len(ids)):
                chain = (ids[i], ids[j], ids[k], ids[i])
                if any(
                    leg not in atlas.transitions for leg in zip(chain, chain[1:])
                ):
                    continue
                comp = chained(chain)
                if comp is not None and not comp.is_identity():
                    failures.append(
                        CocycleFailure(
                            "triple",
                            chain[:3],
                            "cyclic composite is not the identity",
                            _residual(comp),
                        )
                    )

    return CocycleReport(ok=not failures, failures=failures)


def lift_atlas(atlas: Atlas, group: FiniteAbelianGroup, parity: ParityMap) -> Atlas:
    """Apply the covering construction to every chart and transition."""
    report = check_cocycle(atlas)
    if not report.ok:
        raise CoveringError(
            "input atlas fails the cocycle check:\n" + report.describe()
        )
    charts = {
        cid: covering_signature(sig, group, parity)
        for cid, sig in atlas.charts.items()
    }
    transitions = {
        key: lift_super(morphism, group, parity)
        for key, morphism in atlas.transitions.items()
    }
    return Atlas(charts=charts, transitions=transitions)

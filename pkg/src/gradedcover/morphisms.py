"""Morphisms of graded domains and superdomains as coordinate-image maps.

A morphism into a domain with coordinates (y_i, eta_j) is determined by
the pullback images of those coordinates, so it is stored as a validated
mapping from target variable names to superfunctions over the source.
``SuperMorphism`` checks parities only; ``GradedMorphism`` additionally
requires every image to be homogeneous of its variable's weight.
"""

from __future__ import annotations

from typing import Mapping

from .algebra import GradedSignature, SuperRational, SuperSignature
from .errors import MorphismValidationError, SignatureMismatchError


class SuperMorphism:
    """A parity-respecting morphism with a superdomain target.

    The source may be a plain or a graded signature; no weight conditions
    are imposed on the images.
    """

    __slots__ = ("source", "target", "images")

    def __init__(
        self,
        source: SuperSignature,
        target: SuperSignature,
        images: Mapping[str, SuperRational],
    ):
        images = dict(images)
        _check_images_complete(target, images)
        for name, img in images.items():
            if img.signature != source:
                raise SignatureMismatchError(
                    f"image of {name!r} is not a function over the source signature"
                )
        _check_parities(target, images)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("morphisms are immutable")

    def __eq__(self, other):
        if not isinstance(other, SuperMorphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        # coordinatewise cross-multiplication equality
        return all(self.images[n] == other.images[n] for n in self.images)

    __hash__ = None

    def is_identity(self) -> bool:
        if self.source != self.target:
            return False
        sig = self.source
        return all(
            self.images[name] == SuperRational.variable(sig, name)
            for name in sig.even + sig.odd
        )

    def __repr__(self):
        return f"{type(self).__name__}({self.source!r} -> {self.target!r})"


class GradedMorphism(SuperMorphism):
    """A morphism of graded domains: images are homogeneous of the right weight."""

    def __init__(
        self,
        source: GradedSignature,
        target: GradedSignature,
        images: Mapping[str, SuperRational],
    ):
        if not isinstance(source, GradedSignature) or not isinstance(
            target, GradedSignature
        ):
            raise TypeError("graded morphisms need graded signatures on both sides")
        if source.group != target.group or source.parity != target.parity:
            raise SignatureMismatchError(
                "source and target are graded by different groups or parities"
            )
        super().__init__(source, target, images)
        for name in target.even + target.odd:
            img = self.images[name]
            if img.is_zero():
                continue
            expected = target.weight_of_var(name)
            found = img.weight()
            if found != expected:
                raise MorphismValidationError(
                    name,
                    "weight mismatch",
                    expected=str(expected),
                    found="inhomogeneous" if found is None else str(found),
                )


def _check_images_complete(target: SuperSignature, images: dict):
    declared = set(target.even) | set(target.odd)
    for name in sorted(declared):
        if name not in images:
            raise MorphismValidationError(name, "missing image")
    extra = sorted(set(images) - declared)
    if extra:
        raise MorphismValidationError(
            extra[0], "not a variable of the target signature"
        )


def _check_parities(target: SuperSignature, images: dict):
    for name in target.even + target.odd:
        img = images[name]
        if img.is_zero():
            continue
        want = target.parity_of_var(name)
        found = img.grassmann_parity()
        if found != want:
            raise MorphismValidationError(
                name,
                "parity mismatch",
                expected=want,
                found="mixed" if found is None else found,
            )


def compose(second: SuperMorphism, first: SuperMorphism) -> SuperMorphism:
    """The composite morphism; pullbacks compose in the opposite order.

    ``second`` maps B -> C and ``first`` maps A -> B; the result maps
    A -> C with images second*(z) evaluated along first.
    """
    if first.target != second.source:
        raise SignatureMismatchError(
            "inner target and outer source signatures differ"
        )
    images = {
        name: img.substitute(first.images, signature=first.source)
        for name, img in second.images.items()
    }
    if isinstance(first, GradedMorphism) and isinstance(second, GradedMorphism):
        return GradedMorphism(first.source, second.target, images)
    return SuperMorphism(first.source, second.target, images)


def identity_morphism(signature: SuperSignature) -> SuperMorphism:
    images = {
        name: SuperRational.variable(signature, name)
        for name in signature.even + signature.odd
    }
    if isinstance(signature, GradedSignature):
        return GradedMorphism(signature, signature, images)
    return SuperMorphism(signature, signature, images)

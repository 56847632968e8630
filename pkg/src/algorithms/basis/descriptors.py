"""Build a BasisSet from its JSON descriptor."""

from __future__ import annotations

from typing import Any

from src.algorithms.basis.haar import haar_basis
from src.algorithms.basis.orthonormalize import orthonormalize, sampled_function
from src.algorithms.constants import DEFAULT_MAX_CONDITION_NUMBER, DEFAULT_QUADRATURE_PANELS
from src.config.models.run_config import BasisDescriptor
from src.errors import ParameterError
from src.models.basis import BasisSet


def basis_from_descriptor(
    descriptor: BasisDescriptor | dict[str, Any],
    default_levels: int | None = None,
    panels: int = DEFAULT_QUADRATURE_PANELS,
    max_condition_number: float = DEFAULT_MAX_CONDITION_NUMBER,
) -> BasisSet:
    """Construct the basis named by a descriptor.

    Args:
        descriptor: ``{"kind": "haar", "J": int}`` or
            ``{"kind": "custom", "grid": [...], "values": [[...], ...]}``
        default_levels: J used when a Haar descriptor omits it
        panels: Quadrature panels for custom families
        max_condition_number: Gram condition cap for custom families

    Returns:
        The BasisSet

    Raises:
        ParameterError: If a Haar descriptor has no J and no default applies
    """
    if isinstance(descriptor, dict):
        descriptor = BasisDescriptor.model_validate(descriptor)

    if descriptor.kind == "haar":
        levels = descriptor.J if descriptor.J is not None else default_levels
        if levels is None:
            raise ParameterError("Haar descriptor needs J")
        return haar_basis(levels)

    assert descriptor.grid is not None and descriptor.values is not None
    raw = [sampled_function(descriptor.grid, row) for row in descriptor.values]
    return orthonormalize(
        raw,
        panels=panels,
        max_condition_number=max_condition_number,
        descriptor=descriptor.model_dump(),
    )

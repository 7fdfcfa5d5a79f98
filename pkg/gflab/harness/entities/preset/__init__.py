"""Package defining the :obj:`Preset` entity."""

from typing import Any

from gflab.domain.utils.entity import BaseNamedEntity, field_validator, required_field, validated

from ..config import ExperimentConfig


@validated()
class Preset(BaseNamedEntity):
    """A named experiment shipped with gflab.

    Attributes
    ----------
    name : str
        The name of the preset, also the name of its experiment.
    description : str
        What the preset checks.
    config : ExperimentConfig
        The experiment.

    """

    description: str = required_field(str, frozen=True)
    config: ExperimentConfig = required_field(ExperimentConfig, frozen=True)

    @field_validator(config)
    def validate_config(  # noqa  # pylint: disable=unused-argument
        self, field: Any, value: Any
    ) -> None:
        """Validate that the experiment of the preset has the name of the preset."""
        if value.name != self.name:
            raise ValueError(
                f"{self.__class__.__name__}.config must be named {self.name!r}"
            )

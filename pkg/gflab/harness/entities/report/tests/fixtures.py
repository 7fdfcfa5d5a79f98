"""Module defining fixtures for the report entities of the harness."""


from typing import Type

from pytest import fixture

from .factories import CheckFactory, RunResultFactory, TheoremReportFactory


@fixture  # type: ignore
def check_factory() -> Type[CheckFactory]:
    """Fixture to return the factory to create a ``Check``.

    Returns
    -------
    Type[CheckFactory]
        The ``CheckFactory`` class.

    """
    return CheckFactory


@fixture  # type: ignore
def run_result_factory() -> Type[RunResultFactory]:
    """Fixture to return the factory to create a ``RunResult``.

    Returns
    -------
    Type[RunResultFactory]
        The ``RunResultFactory`` class.

    """
    return RunResultFactory


@fixture  # type: ignore
def theorem_report_factory() -> Type[TheoremReportFactory]:
    """Fixture to return the factory to create a ``TheoremReport``.

    Returns
    -------
    Type[TheoremReportFactory]
        The ``TheoremReportFactory`` class.

    """
    return TheoremReportFactory

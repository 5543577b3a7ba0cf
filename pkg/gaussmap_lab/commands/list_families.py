import click

from gaussmap_lab.commands.common import emit
from gaussmap_lab.families.registry import list_families
from gaussmap_lab.schemas import FamiliesOut, FamilyInfoOut


@click.command("list-families")
def command() -> None:
    """Registered family ids with their parameters and punctures."""
    emit(FamiliesOut(families=[FamilyInfoOut.model_validate(info) for info in list_families()]))

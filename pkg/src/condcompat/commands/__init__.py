"""CLI subcommands and their registry."""

from condcompat.commands.base import BaseCommand
from condcompat.commands.check import CheckCommand
from condcompat.commands.complete import CompleteCommand
from condcompat.commands.derive import DeriveCommand
from condcompat.commands.epsilon import EpsilonCommand
from condcompat.commands.gen import GenCommand
from condcompat.commands.registry import CommandRegistry


def default_registry() -> CommandRegistry:
    registry = CommandRegistry()
    for command in (
        CheckCommand(),
        CompleteCommand(),
        EpsilonCommand(),
        DeriveCommand(),
        GenCommand(),
    ):
        registry.register(command)
    return registry


__all__ = [
    "BaseCommand",
    "CheckCommand",
    "CommandRegistry",
    "CompleteCommand",
    "DeriveCommand",
    "EpsilonCommand",
    "GenCommand",
    "default_registry",
]

"""
Name-keyed registry of parity rules

The CLI and the verification suites resolve ``--rule NAME`` through a
registry, so third-party rules plug in with one ``register`` call.
"""

import logging
from typing import Dict, List, Optional

from .errors import UnknownRuleError
from .interfaces import ParityRule
from .rules import ComponentParity, GaussianParity, HybridParity, ZeroParity


logger = logging.getLogger(__name__)


class RuleRegistry:
    """
    Manages the parity rules available by name.

    Usage:
        registry = default_registry()
        rule = registry.get_rule("gaussian")
    """

    def __init__(self):
        self.rules: Dict[str, ParityRule] = {}

    def register(self, rule: ParityRule) -> None:
        """
        Register a rule under its name, replacing any previous one.

        Args:
            rule: Rule instance
        """
        if rule.name in self.rules:
            logger.warning(f"Replacing parity rule '{rule.name}'")
        self.rules[rule.name] = rule

    def register_multiple(self, rules: List[ParityRule]) -> None:
        for rule in rules:
            self.register(rule)

    def get_rule(self, name: str) -> ParityRule:
        """
        Look up a rule.

        Args:
            name: Registered rule name

        Returns:
            The rule

        Raises:
            UnknownRuleError: No rule has that name
        """
        rule = self.find(name)
        if rule is None:
            known = ", ".join(sorted(self.rules))
            raise UnknownRuleError(f"unknown parity rule '{name}' (known: {known})", name=name)
        return rule

    def find(self, name: str) -> Optional[ParityRule]:
        return self.rules.get(name)

    def list_rules(self) -> List[ParityRule]:
        return list(self.rules.values())

    def describe(self) -> str:
        """One line per rule, experimental rules flagged"""
        lines = []
        for rule in self.rules.values():
            flag = " [experimental]" if rule.experimental else ""
            lines.append(f"{rule.name}{flag}: {rule.description}")
        return "\n".join(lines)


def default_registry() -> RuleRegistry:
    """Registry holding the four built-in rules"""
    registry = RuleRegistry()
    registry.register_multiple([GaussianParity(), ComponentParity(), HybridParity(), ZeroParity()])
    return registry

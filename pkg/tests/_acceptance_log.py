"""Shared store for acceptance outcomes, printed in the terminal summary."""

LINES = {}

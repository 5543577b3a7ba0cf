from gaussmap_lab.commands import analyze, bounds, list_families, mesh, solve, verify

__all__ = ["analyze", "bounds", "list_families", "mesh", "solve", "verify"]

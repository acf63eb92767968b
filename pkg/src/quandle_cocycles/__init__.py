"""Quandle module, conjugacy and generalized cocycle invariants of knots and twist-spun knots."""

# -*- coding: utf-8 -*-#
"""Point sets, the empirical Pareto front pipeline and quality indicators."""

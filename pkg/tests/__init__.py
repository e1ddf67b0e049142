# -*- coding: utf-8 -*-#
"""Global test settings"""
import os

os.environ.setdefault("TELEMETRY", "OFF")

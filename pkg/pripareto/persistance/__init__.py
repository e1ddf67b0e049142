# -*- coding: utf-8 -*-#
"""Module containing the persistence layer of the application.

Domain objects are serialized to JSON, evaluation logs to delimited text.
"""
from .serialize import PriParetoDecoder, PriParetoEncoder
from .store import Store

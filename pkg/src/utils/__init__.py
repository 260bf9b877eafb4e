"""
DSP Utility Functions
Serialization of instances, profiles and graphs, rational formatting and reports.
"""

from .instance_io import (instance_from_document, instance_to_document, load_graph,
                          load_instance, load_profile, parse_edge_list, save_instance,
                          save_profile)
from .rationals import decimal_string, format_rational, parse_rational
from .reports import Report

__all__ = ['load_instance', 'save_instance', 'load_profile', 'save_profile', 'load_graph',
           'parse_edge_list', 'instance_to_document', 'instance_from_document',
           'parse_rational', 'format_rational', 'decimal_string', 'Report']

"""
The classify sub-module handles graphs whose fundamental cycle is essentially irreducible: it finds the special vertex
A, the branches around it, Gamma' and the template family Gamma' belongs to.
"""

from dual_graph_cycles.classify._essential import EssentialIrreducibility, essential_irreducibility
from dual_graph_cycles.classify._ade import recognize_ade, tree_type, ChainLayout, star_layout
from dual_graph_cycles.classify._gamma_prime import ClassificationResult, extract_gamma_prime
from dual_graph_cycles.classify._templates import Template, build_template, templates_of_size, find_matches, \
    prop39_tables
from dual_graph_cycles.classify._classify import match_theorem38, classify

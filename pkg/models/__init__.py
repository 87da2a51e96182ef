"""
This is the __init__.py file for the models package.

Holds the numpy-backed dataclasses: edge objectives, the variable map, the QUBO and
Ising models, the amplitude state and the routing problem bundle.
"""

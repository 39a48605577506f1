# generators package
from .descriptor    import GeneratorDescriptor, GeneratorKind, Representation
from .traces        import MatrixChain, chevalley_polynomial, pi_chain, symmetrized_trace, trace_power_polynomial, trace_tensor
from .epsilon_chain import epsilon_chain_tensor, pfaffian, pfaffian_polynomial, polarized_pfaffian
from .enumeration   import enumerate_generators, realize

__all__ = [
    "GeneratorDescriptor",
    "GeneratorKind",
    "MatrixChain",
    "Representation",
    "chevalley_polynomial",
    "enumerate_generators",
    "epsilon_chain_tensor",
    "pfaffian",
    "pfaffian_polynomial",
    "pi_chain",
    "polarized_pfaffian",
    "realize",
    "symmetrized_trace",
    "trace_power_polynomial",
    "trace_tensor",
]

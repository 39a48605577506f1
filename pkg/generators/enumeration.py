"""
Generator enumeration and realization.

Trace products: the orbit of a product of trace factors under S_k is exactly the set
of ways to split {1..k} into cyclically ordered cycles, i.e. one descriptor per
permutation of {1..k} read through its cycle decomposition (k! descriptors).

Epsilon chains (family D, k >= r): the realized tensor only depends on the collection
of r slot blocks, each linearly ordered, because swapping two chains leaves it fixed
and reversing a chain of length m multiplies it by (-1)^(m+1). One descriptor per
set partition of {1..k} into r blocks and per block ordering with first slot < last slot.
"""
from itertools import permutations, product

from sympy.utilities.iterables import multiset_partitions

from base_model.errors          import BudgetExceeded
from classical_lie.algebra      import ClassicalAlgebra
from classical_lie.algebra_spec import Family
from config.setup               import DEFAULT_BUDGETS, Budgets
from generators.descriptor      import GeneratorDescriptor, GeneratorKind, Representation
from generators.epsilon_chain   import epsilon_chain_tensor
from generators.traces          import trace_tensor
from tensor_core.adjoint_tensor import AdjointTensor, permute, tensor_product
from tensor_core.permutation    import Permutation


def slot_order_permutation(sequence) -> Permutation:
    """sigma with permute(sigma, P)(X) = P(X_{sequence[0]}, X_{sequence[1]}, ..)."""
    return Permutation.from_sequence(sequence).inverse()


def trace_cycle_structures(k: int) -> list[tuple[tuple[int, ...], ...]]:
    structures = {tuple(Permutation(images).cycles()) for images in permutations(range(1, k + 1))}
    return sorted(structures, key=lambda cycles: (len(cycles), cycles))


def _linear_orders_up_to_reversal(block):
    if len(block) == 1:
        yield tuple(block)
        return
    for order in permutations(block):
        if order[0] < order[-1]:
            yield order


def epsilon_block_structures(k: int, r: int) -> list[tuple[tuple[int, ...], ...]]:
    if k < r:
        return []
    structures = []
    for partition in multiset_partitions(list(range(1, k + 1)), r):
        blocks = sorted((sorted(block) for block in partition), key=lambda block: block[0])
        for orders in product(*(_linear_orders_up_to_reversal(block) for block in blocks)):
            structures.append(tuple(orders))
    return sorted(structures)


def epsilon_descriptor(blocks) -> GeneratorDescriptor:
    blocks = tuple(tuple(block) for block in blocks)
    sequence = [slot for block in blocks for slot in block]
    return GeneratorDescriptor.epsilon_chain(tuple(len(block) for block in blocks), slot_order_permutation(sequence))


def enumerate_generators(algebra: ClassicalAlgebra, k: int, include_epsilon: bool = True,
                         rep: Representation = Representation.DEFINING,
                         budgets: Budgets = DEFAULT_BUDGETS) -> list[GeneratorDescriptor]:
    if k < 1:
        raise ValueError("generator degree must be positive")
    BudgetExceeded.check(f"generators of degree {k} for {algebra.label}", algebra.dim_g ** k, budgets.entries)
    descriptors = [GeneratorDescriptor.trace_product(cycles, rep=rep) for cycles in trace_cycle_structures(k)]
    if include_epsilon and algebra.family is Family.D:
        descriptors += [epsilon_descriptor(blocks) for blocks in epsilon_block_structures(k, algebra.rank)]
    return descriptors


def realize(algebra: ClassicalAlgebra, descriptor: GeneratorDescriptor, budgets: Budgets = DEFAULT_BUDGETS) -> AdjointTensor:
    descriptor.check_applicable(algebra.family, algebra.rank)
    if descriptor.kind is GeneratorKind.EPSILON_CHAIN:
        assembled = epsilon_chain_tensor(algebra, descriptor.chain_lengths, budgets)
    else:
        assembled = AdjointTensor.scalar(1, algebra.dim_g)
        for cycle in descriptor.cycles:
            assembled = tensor_product(assembled, trace_tensor(algebra, len(cycle), descriptor.rep, budgets))
        sequence = [slot for cycle in descriptor.cycles for slot in cycle]
        assembled = permute(slot_order_permutation(sequence), assembled)
    return permute(descriptor.perm, assembled)

"""
Stochastic Maps in Kraus Form
Predual maps W -> E_out(sum K W K*) between block algebras, where E_out
compresses onto the diagonal blocks of the output algebra
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from src.algebra.algebra import AlgebraShape, NormalFunctional, check_same_shape
from src.divergence.alpha_divergence import alpha_divergence
from src.utils.errors import DomainError, ShapeMismatchError
from src.utils.sampling import make_rng

CPTP_TOL = 1e-10


def embed_blocks(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Block-diagonal matrix of the given blocks"""
    return linalg.block_diag(*blocks) if len(blocks) > 1 else np.array(blocks[0], dtype=complex)


def compress_blocks(shape: AlgebraShape, matrix: np.ndarray) -> List[np.ndarray]:
    """Diagonal blocks of a full matrix (the conditional expectation onto the algebra)"""
    blocks = []
    for offset, n in zip(shape.offsets, shape.block_dims):
        blocks.append(matrix[offset:offset + n, offset:offset + n].copy())
    return blocks


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """Kraus operators K_k of size N_out x N_in acting on block-diagonal embeddings"""

    in_shape: AlgebraShape
    out_shape: AlgebraShape
    kraus: Tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(np.array(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise DomainError("a channel needs at least one Kraus operator")
        expected = (self.out_shape.total_dim, self.in_shape.total_dim)
        for k in ops:
            if k.shape != expected:
                raise ShapeMismatchError(f"Kraus operator of shape {k.shape}, expected {expected}")
        object.__setattr__(self, "kraus", ops)

    def scaled(self, factor: float) -> "KrausChannel":
        return KrausChannel(self.in_shape, self.out_shape, [factor * k for k in self.kraus])

    def to_dict(self) -> Dict:
        return {
            "in": self.in_shape.to_dict(),
            "out": self.out_shape.to_dict(),
            "num_kraus": len(self.kraus),
        }


def apply_predual(channel: KrausChannel, omega: NormalFunctional) -> NormalFunctional:
    """W -> E_out(sum K W K*)"""
    check_same_shape(channel.in_shape, omega.shape)
    w = embed_blocks(omega.blocks)
    out = sum(k @ w @ k.conj().T for k in channel.kraus)
    return NormalFunctional(channel.out_shape, compress_blocks(channel.out_shape, out))


def choi_matrix(channel: KrausChannel) -> np.ndarray:
    """Block-diagonal stack over input blocks of sum_{jk} E_jk (x) Phi(E_jk)"""
    in_shape = channel.in_shape
    n_out = channel.out_shape.total_dim
    per_block = []
    for offset, n in zip(in_shape.offsets, in_shape.block_dims):
        choi = np.zeros((n * n_out, n * n_out), dtype=complex)
        for j in range(n):
            for k in range(n):
                unit = np.zeros((in_shape.total_dim, in_shape.total_dim), dtype=complex)
                unit[offset + j, offset + k] = 1.0
                image = sum(op @ unit @ op.conj().T for op in channel.kraus)
                compressed = embed_blocks(compress_blocks(channel.out_shape, image))
                choi[j * n_out:(j + 1) * n_out, k * n_out:(k + 1) * n_out] = compressed
        per_block.append(choi)
    return linalg.block_diag(*per_block)


def validate_channel(channel: KrausChannel) -> Dict[str, bool]:
    """
    Check trace preservation and complete positivity

    Returns:
        dict: {"trace_preserving": bool, "completely_positive": bool}
    """
    tp_defect = trace_preservation_defect(channel)
    choi = choi_matrix(channel)
    min_eig = linalg.eigvalsh(0.5 * (choi + choi.conj().T)).min()
    return {
        "trace_preserving": bool(tp_defect <= CPTP_TOL),
        "completely_positive": bool(min_eig >= -CPTP_TOL),
    }


def trace_preservation_defect(channel: KrausChannel) -> float:
    gram = sum(k.conj().T @ k for k in channel.kraus)
    return float(max(
        np.max(np.abs(b - np.eye(b.shape[0])))
        for b in compress_blocks(channel.in_shape, gram)
    ))


def compose(second: KrausChannel, first: KrausChannel) -> KrausChannel:
    """second o first, with the intermediate compression written as block projectors"""
    check_same_shape(first.out_shape, second.in_shape)
    mid = first.out_shape
    projectors = []
    for offset, n in zip(mid.offsets, mid.block_dims):
        proj = np.zeros((mid.total_dim, mid.total_dim), dtype=complex)
        proj[offset:offset + n, offset:offset + n] = np.eye(n)
        projectors.append(proj)
    ops = [b @ proj @ a for b in second.kraus for proj in projectors for a in first.kraus]
    return KrausChannel(first.in_shape, second.out_shape, ops)


def monotonicity_gap(
    channel: KrausChannel,
    phi: NormalFunctional,
    psi: NormalFunctional,
    alpha: float
) -> float:
    """S_alpha(phi, psi) - S_alpha(Phi phi, Phi psi); >= 0 for stochastic maps"""
    status = validate_channel(channel)
    if not all(status.values()):
        raise DomainError(f"invalid channel: {status}")
    if not (phi.is_positive and psi.is_positive):
        raise DomainError("monotonicity is stated for positive functionals")
    before = alpha_divergence(phi, psi, alpha).value
    after = alpha_divergence(apply_predual(channel, phi), apply_predual(channel, psi), alpha).value
    return before - after


def chain_divergences(
    channels: Sequence[KrausChannel],
    phi: NormalFunctional,
    psi: NormalFunctional,
    alpha: float
) -> List[float]:
    """S_alpha along phi, Phi_1 phi, Phi_2 Phi_1 phi, ...; non-increasing"""
    values = [alpha_divergence(phi, psi, alpha).value]
    for channel in channels:
        phi, psi = apply_predual(channel, phi), apply_predual(channel, psi)
        values.append(alpha_divergence(phi, psi, alpha).value)
    return values


# ============= Channel Factories =============

def identity_channel(shape: AlgebraShape) -> KrausChannel:
    return KrausChannel(shape, shape, [np.eye(shape.total_dim)])


def pinching_channel(shape: AlgebraShape) -> KrausChannel:
    """Kraus operators |j><j|: keeps only the diagonal of every block"""
    n = shape.total_dim
    ops = []
    for j in range(n):
        k = np.zeros((n, n), dtype=complex)
        k[j, j] = 1.0
        ops.append(k)
    return KrausChannel(shape, shape, ops)


def partial_trace_channel(keep_dim: int, traced_dim: int) -> KrausChannel:
    """M_{a*b} -> M_a, tracing out the second tensor factor"""
    ops = []
    for k in range(traced_dim):
        bra = np.zeros((1, traced_dim))
        bra[0, k] = 1.0
        ops.append(np.kron(np.eye(keep_dim), bra))
    return KrausChannel(AlgebraShape((keep_dim * traced_dim,)), AlgebraShape((keep_dim,)), ops)


def stochastic_matrix_channel(transition: np.ndarray) -> KrausChannel:
    """
    Classical channel between commutative algebras

    Args:
        transition: column-stochastic matrix T[i, j] = P(i | j)
    """
    t = np.asarray(transition, dtype=float)
    if t.ndim != 2 or np.any(t < 0) or not np.allclose(t.sum(axis=0), 1.0, atol=1e-12):
        raise DomainError("transition matrix must be column-stochastic")
    m, n = t.shape
    ops = []
    for i in range(m):
        for j in range(n):
            if t[i, j] > 0:
                k = np.zeros((m, n), dtype=complex)
                k[i, j] = np.sqrt(t[i, j])
                ops.append(k)
    return KrausChannel(AlgebraShape((1,) * n), AlgebraShape((1,) * m), ops)


def random_channel(
    in_shape: AlgebraShape,
    out_shape: AlgebraShape,
    seed,
    env_dim: int = None
) -> KrausChannel:
    """
    Stinespring dilation of a Haar-random isometry C^{N_in} -> C^{N_out} (x) C^{env}

    Environment dimension drawn from 2..4 unless given.
    """
    rng = make_rng(seed)
    n_in, n_out = in_shape.total_dim, out_shape.total_dim
    env = env_dim or int(rng.integers(2, 5))
    env = max(env, -(-n_in // n_out))
    dim = n_out * env
    unitary = unitary_group.rvs(dim, random_state=rng) if dim > 1 else np.ones((1, 1))
    isometry = unitary[:, :n_in]
    ops = [isometry.reshape(n_out, env, n_in)[:, e, :] for e in range(env)]
    return KrausChannel(in_shape, out_shape, ops)

"""Differential reduction and evaluation of Lauricella-type functions."""

from ._hyperred import (
    EngineError,
    eps_coeffs_fd,
    fd_diff_series,
    fd_euler_integral,
    fd_one_one_two,
    fd_reduce,
    fd_series,
    feynman_h_series,
    fs_reduce,
    fs_series,
    hyperb_series,
    li2,
    li3,
    mpl,
    nielsen_s12,
    offshell_series,
)

__all__ = [
    "EngineError",
    "eps_coeffs_fd",
    "fd_diff_series",
    "fd_euler_integral",
    "fd_one_one_two",
    "fd_reduce",
    "fd_series",
    "feynman_h_series",
    "fs_reduce",
    "fs_series",
    "hyperb_series",
    "li2",
    "li3",
    "mpl",
    "nielsen_s12",
    "offshell_series",
]

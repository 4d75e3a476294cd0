"""Small bundled inputs: the 4x4 worked-example matrix and a few PBM images."""

from importlib import resources


def path(name: str):
    return resources.files(__name__).joinpath(name)


def read_bytes(name: str) -> bytes:
    return path(name).read_bytes()

"""Bundled example inputs."""

from importlib import resources


def path(name):
    return resources.files("gamearg").joinpath("data", name)


def read(name):
    return path(name).read_text(encoding="utf-8")


def fig1():
    from .graph import parse_edge_list
    return parse_edge_list(read("fig1.edges"))

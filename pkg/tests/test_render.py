import pytest

from heapdyck import heaps, multisets, render


def heap(*dimers):
    return heaps.Heap(dimers)


def animal(*points):
    return heaps.PointAnimal(frozenset(points))


class TestPathAscii:
    def test_dyck_peak(self):
        assert render.path_ascii("UUDD") == " /\\\n/  \\"

    def test_below_axis(self):
        assert render.path_ascii("UDDU") == "/\\\n  \\/"

    def test_single_step_pair(self):
        assert render.path_ascii("UD") == "/\\"


class TestHeapAscii:
    def test_stacked_column(self):
        assert render.heap_ascii(heap((0, 0), (0, 1))) == "[__]\n[__]"

    def test_shifted_upper(self):
        assert render.heap_ascii(heap((0, 0), (-1, 1))) == "[__]\n  [__]"

    def test_two_shoulders(self):
        art = render.heap_ascii(heap((0, 0), (-1, 1), (1, 1)))
        assert art == "[__][__]\n  [__]"


class TestAnimalAscii:
    def test_l_shape(self):
        assert render.animal_ascii(animal((0, 0), (1, 0), (1, 1))) == "  o\no o"

    def test_single_cell(self):
        assert render.animal_ascii(animal((0, 0))) == "o"


class TestMultisetAscii:
    def test_with_bound(self):
        art = render.multiset_ascii(multisets.Multiset((1, 3, 3), 3))
        assert art == "  o o\n  .\no"

    def test_dots_mark_free_diagonal(self):
        art = render.multiset_ascii(multisets.Multiset((2, 2), 2))
        assert art == "o o\n."


class TestSvg:
    def test_path_structure(self):
        svg = render.path_svg("UUDD")
        assert svg.startswith("<svg")
        assert svg.rstrip().endswith("</svg>")
        assert "<polyline" in svg
        assert "stroke-dasharray" in svg

    def test_heap_structure(self):
        svg = render.heap_svg(heap((0, 0), (-1, 1)))
        assert svg.count("<rect") == 3
        assert 'width="40" height="20"' in svg
        assert "stroke-dasharray" in svg

    def test_heap_without_negative_columns_skips_origin_line(self):
        svg = render.heap_svg(heap((0, 0), (0, 1)))
        assert "stroke-dasharray" not in svg

    def test_animal_circles(self):
        svg = render.animal_svg(animal((0, 0), (1, 0), (1, 1)))
        assert svg.count("<circle") == 3

    def test_multiset_overlay(self):
        svg = render.multiset_svg(multisets.Multiset((2, 2), 2))
        assert "<polyline" in svg
        assert svg.count("<circle") == 2

    def test_deterministic(self):
        a = render.animal_svg(animal((0, 0), (0, 1), (1, 1)))
        b = render.animal_svg(animal((1, 1), (0, 0), (0, 1)))
        assert a == b


class TestDispatch:
    def test_routes_each_kind(self):
        assert render.render("path", "UD") == "/\\"
        assert render.render("heap", heap((0, 0))) == "[__]"
        assert render.render("animal", animal((0, 0))) == "o"
        assert "o" in render.render("multiset", multisets.Multiset((1, 1), 2))

    def test_svg_format(self):
        assert render.render("path", "UD", fmt="svg").startswith("<svg")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            render.render("graph", "UD")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render.render("path", "UD", fmt="png")

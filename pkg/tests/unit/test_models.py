import os
import tempfile
from unittest import TestCase

from graphflow.exceptions import ModelError, InputException, FormatError, UnknownSymbolError
from graphflow.lab.models import (get_model, linear_bracket, nambu_bivector, NambuDatum, load_model_file,
                                  casimir_check, abstract_nambu, BUILTIN_MODELS, PoissonModel)
from graphflow.supergeom.diffpoly import DiffPoly
from graphflow.supergeom.superpoly import SuperPoly

x1, x2, x3 = (DiffPoly.coordinate(i) for i in (1, 2, 3))


def write(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, 'w') as f:
        f.write(text)
    return path


class TestBuiltinModels(TestCase):
    def test_all_builtins_load(self):
        for name in BUILTIN_MODELS:
            self.assertEqual(get_model(name).name, name)

    def test_jacobi_status(self):
        for name in ('so3', 'sl2', 'heisenberg', 'abstract2', 'nambu-sphere', 'nambu-cubic'):
            self.assertTrue(get_model(name).is_poisson(), name)
        for name in ('broken', 'abstract3'):
            self.assertFalse(get_model(name).is_poisson(), name)

    def test_so3_components(self):
        P = get_model('so3').P
        self.assertEqual(P, SuperPoly(3, {(1, 2): x3, (2, 3): x1, (3, 1): x2}))

    def test_sphere_is_so3(self):
        self.assertEqual(get_model('nambu-sphere').P, get_model('so3').P)

    def test_sl2(self):
        P = get_model('sl2').P
        self.assertEqual(P.coefficient((1, 2)), x2.scale(2))
        self.assertEqual(P.coefficient((1, 3)), x3.scale(-2))
        self.assertEqual(P.coefficient((2, 3)), x1)

    def test_unknown(self):
        with self.assertRaises(InputException):
            get_model('so4')


class TestLinearBrackets(TestCase):
    def test_antisymmetric_entries_merge(self):
        model = linear_bracket({(1, 2, 3): 1, (2, 1, 3): -1})
        self.assertEqual(model.P, SuperPoly(3, {(1, 2): x3}))

    def test_not_antisymmetric(self):
        with self.assertRaises(ModelError):
            linear_bracket({(1, 2, 3): 1, (2, 1, 3): 1})

    def test_diagonal(self):
        with self.assertRaises(ModelError):
            linear_bracket({(1, 1, 2): 1})

    def test_dimension(self):
        self.assertEqual(linear_bracket({(1, 2, 1): 1}, 4).r, 4)
        with self.assertRaises(ModelError):
            linear_bracket({(1, 5, 1): 1}, 4)


class TestNambu(TestCase):
    def test_casimir(self):
        self.assertTrue(casimir_check(get_model('nambu-cubic')))
        with self.assertRaises(ModelError):
            casimir_check(get_model('so3'))

    def test_parametric_family(self):
        t = DiffPoly.parameter('t')
        model = nambu_bivector(NambuDatum(x1 * x2 * x3 + t * x1, DiffPoly.constant(1)), 'family', ('t',))
        self.assertEqual(model.P.coefficient((2, 3)), x2 * x3 + t)
        fixed = model.with_parameters({'t': 0})
        self.assertEqual(fixed.params, ())
        self.assertEqual(fixed.P.coefficient((2, 3)), x2 * x3)
        self.assertEqual(fixed.datum.a, x1 * x2 * x3)
        with self.assertRaises(ModelError):
            model.with_parameters({'s': 1})

    def test_abstract(self):
        model = abstract_nambu()
        self.assertEqual(model.P.coefficient((1, 2)), DiffPoly.symbol('rho') * DiffPoly.symbol('a', (3,)))
        self.assertTrue(model.is_poisson())


class TestModelFiles(TestCase):
    def test_bivector_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = write(d, 'rot.ini', '[model]\nname = rot\nr = 3\nparams = t\nP12 = t*x3\nP13 = -x2\nP23 = x1\n')
            model = get_model(path)
        self.assertEqual(model.name, 'rot')
        self.assertEqual(model.params, ('t',))
        self.assertEqual(model.with_parameters({'t': 1}).P, get_model('so3').P)

    def test_nambu_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = write(d, 'cubic.ini', '[model]\nkind = nambu\na = (x1^3 + x2^3 + x3^3)/3\nrho = 1 + x1^2\n')
            model = load_model_file(path)
        self.assertEqual(model.name, 'cubic')
        self.assertEqual(model.P, get_model('nambu-cubic').P)

    def test_bad_files(self):
        with tempfile.TemporaryDirectory() as d:
            with self.assertRaises(FormatError):
                load_model_file(write(d, 'a.ini', '[other]\nr = 3\n'))
            with self.assertRaises(FormatError):
                load_model_file(write(d, 'b.ini', '[model]\nr = 1\n'))
            with self.assertRaises(FormatError):
                load_model_file(write(d, 'c.ini', '[model]\nr = 3\nP11 = x1\n'))
            with self.assertRaises(FormatError):
                load_model_file(write(d, 'd.ini', '[model]\nkind = nambu\n'))
            with self.assertRaises(UnknownSymbolError):
                load_model_file(write(d, 'e.ini', '[model]\nr = 2\nP12 = s*x1\n'))

    def test_model_needs_a_bivector(self):
        with self.assertRaises(InputException):
            PoissonModel('vector', SuperPoly(3, {(1,): x1}))

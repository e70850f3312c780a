"""
Serializers for certificates and reports

Includes serializers for:
- Rationals ({"num": p, "den": q}, reduced, never floats)
- BaseCertificate
- ContinuousGyrocoloring
- FractionalWitness
- Graph (edge-list JSON)
- BoundsReport

All are rest_framework serializers: to_representation gives plain JSON data,
load() validates JSON data back into the domain object and raises
ValidationError at the JSON path of the first bad value.
"""

from __future__ import annotations

import json
import math
from decimal import Decimal
from fractions import Fraction

from mylogger import Logger
from rest_framework import serializers
from rest_framework.settings import api_settings

from gyrochromatic.certs.models import ContinuousGyrocoloring
from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.generators import make_graph
from gyrochromatic.graphs.models import AbelianGroup
from gyrochromatic.gyro import BaseCertificate, BoundsReport
from gyrochromatic.invariants import FractionalWitness

logger = Logger()


def load_json(text: str):
    """ JSON text -> data with floats kept as Decimal, so fields can reject them """
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc.msg}", location=f"line {exc.lineno} column {exc.colno}")


def first_error(detail, location: str = "$") -> tuple[str, str]:
    """ (JSON path, message) of the first error in a rest_framework error structure """
    if isinstance(detail, dict):
        for key, value in detail.items():
            if not value:
                continue
            if key == api_settings.NON_FIELD_ERRORS_KEY:
                return first_error(value, location)
            return first_error(value, f"{location}[{key}]" if isinstance(key, int) else f"{location}.{key}")
    elif isinstance(detail, list):
        for i, value in enumerate(detail):
            if isinstance(value, (dict, list)):
                if value:
                    return first_error(value, f"{location}[{i}]")
            else:
                return location, str(value)
    return location, str(detail)


class StrictIntegerField(serializers.IntegerField):
    """ JSON integers only: no floats, strings or booleans """
    default_error_messages = {"float": "floats are not allowed, got {value}."}

    def to_internal_value(self, data):
        if isinstance(data, (Decimal, float)):
            self.fail("float", value=data)
        if isinstance(data, bool) or not isinstance(data, int):
            self.fail("invalid")
        return super().to_internal_value(data)


class StrictBooleanField(serializers.BooleanField):
    """ JSON true / false only """

    def to_internal_value(self, data):
        if not isinstance(data, bool):
            self.fail("invalid")
        return data


def element_list_field():
    """ A list of group elements, each a list of residues """
    return serializers.ListField(child=serializers.ListField(child=StrictIntegerField()))


class JSONSerializer(serializers.Serializer):
    """ Serializer with JSON text helpers; validate() returns the domain object """

    def serialize(self, instance) -> str:
        return json.dumps(self.to_representation(instance), indent=2)

    def load(self, data):
        serializer = type(self)(data=data)
        if not serializer.is_valid():
            location, message = first_error(serializer.errors)
            raise ValidationError(message, location=location)
        return serializer.validated_data

    def parse(self, text: str):
        return self.load(load_json(text))


class RationalSerializer(JSONSerializer):
    """ Handles exact rationals as {"num": p, "den": q} """
    num = StrictIntegerField(source="numerator")
    den = StrictIntegerField(source="denominator")

    def to_representation(self, instance):
        return super().to_representation(Fraction(instance))

    def validate_den(self, value):
        if value <= 0:
            raise serializers.ValidationError("denominator must be positive.")
        return value

    def validate(self, attrs):
        num, den = attrs["numerator"], attrs["denominator"]
        if math.gcd(num, den) != 1:
            raise serializers.ValidationError(f"{num}/{den} is not reduced.")
        return Fraction(num, den)


class GroupSerializer(JSONSerializer):
    """ Handles AbelianGroup as {"moduli": [m1, ..., md]} """
    moduli = serializers.ListField(child=StrictIntegerField())

    def validate(self, attrs):
        try:
            return AbelianGroup(tuple(attrs["moduli"]))
        except ValidationError as exc:
            raise serializers.ValidationError({"moduli": exc.message})


class CertificateSerializer(JSONSerializer):
    """ Handles BaseCertificate with the fixed key order graph_label, group, A, f, density """
    graph_label = serializers.CharField(allow_blank=True, trim_whitespace=False)
    group = GroupSerializer()
    A = element_list_field()
    f = element_list_field()
    density = RationalSerializer()

    def validate_A(self, value):
        elements = [tuple(x) for x in value]
        if elements != sorted(elements):
            logger.warning("A is not sorted, normalising")
        return elements

    def validate_f(self, value):
        return [tuple(x) for x in value]

    def validate(self, attrs):
        group = attrs["group"]
        for key in ("A", "f"):
            for i, x in enumerate(attrs[key]):
                try:
                    group.validate(x)
                except ValidationError as exc:
                    raise serializers.ValidationError({key: {i: exc.message}})
        try:
            cert = BaseCertificate(group, attrs["A"], attrs["f"], graph_label=attrs["graph_label"])
        except ValidationError as exc:
            raise serializers.ValidationError({exc.location or "A": exc.message})
        if attrs["density"] != cert.density:
            raise serializers.ValidationError(
                {"density": f"density {attrs['density']} does not match |A|/|Z| = {cert.density}"}
            )
        return cert


class GyrocoloringSerializer(JSONSerializer):
    """ Handles ContinuousGyrocoloring as {"z", "base": [[a, b], ...], "shifts"} """
    z = RationalSerializer()
    base = serializers.ListField(child=RationalSerializer(many=True, min_length=2, max_length=2))
    shifts = RationalSerializer(many=True)

    def validate(self, attrs):
        try:
            return ContinuousGyrocoloring(
                attrs["z"], tuple(tuple(pair) for pair in attrs["base"]), tuple(attrs["shifts"])
            )
        except ValidationError as exc:
            raise serializers.ValidationError({exc.location or "base": exc.message})


class PrimalEntrySerializer(JSONSerializer):
    """ One (independent set, weight) column of a fractional coloring """
    set = serializers.ListField(child=StrictIntegerField())
    weight = RationalSerializer()

    def to_representation(self, instance):
        members, weight = instance
        return super().to_representation({"set": list(members), "weight": weight})

    def validate(self, attrs):
        return attrs["set"], attrs["weight"]


class WitnessSerializer(JSONSerializer):
    """ Handles FractionalWitness """
    value = RationalSerializer()
    method = serializers.CharField(default="lp")
    primal = PrimalEntrySerializer(many=True)
    dual = RationalSerializer(many=True)

    def validate(self, attrs):
        return FractionalWitness(
            value=attrs["value"],
            primal=tuple(attrs["primal"]),
            dual=tuple(attrs["dual"]),
            method=attrs["method"],
        )


class GraphSerializer(JSONSerializer):
    """ Handles Graph as {"label", "n", "edges"} """
    label = serializers.CharField(default="", allow_blank=True, trim_whitespace=False)
    n = StrictIntegerField()
    edges = serializers.ListField(child=serializers.ListField(child=StrictIntegerField(), min_length=2, max_length=2))

    def validate(self, attrs):
        try:
            return make_graph(attrs["n"], [tuple(e) for e in attrs["edges"]], label=attrs["label"])
        except ValidationError as exc:
            raise serializers.ValidationError({"edges": exc.message})


class BoundsSerializer(JSONSerializer):
    """ Handles BoundsReport; the certificate is nested under "certificate" """
    graph_label = serializers.CharField(allow_blank=True, trim_whitespace=False)
    n = StrictIntegerField()
    chi_f = RationalSerializer()
    gyro_lower = RationalSerializer()
    lower_provenance = serializers.CharField()
    gyro_upper = RationalSerializer()
    chi_c = RationalSerializer()
    chi = StrictIntegerField()
    exact = serializers.DictField(child=StrictBooleanField())
    certificate = CertificateSerializer(source="upper_certificate")

    def validate(self, attrs):
        try:
            return BoundsReport(**attrs)
        except ValidationError as exc:
            raise serializers.ValidationError({"gyro_lower": exc.message})


def parse_certificate_or_coloring(text: str):
    """ A certificate file holds either a BaseCertificate or a ContinuousGyrocoloring """
    data = load_json(text)
    if isinstance(data, dict) and "z" in data:
        return GyrocoloringSerializer().load(data)
    return CertificateSerializer().load(data)

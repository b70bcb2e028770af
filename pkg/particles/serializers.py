from fractions import Fraction

from rest_framework import serializers

from lattice.supernode import leaf_code

COLORS = ("r", "g", "b", "anti-r", "anti-g", "anti-b")
SWAP_SLOTS = ("central", "higgsonic", "gluonic")


class RootField(serializers.ListField):
    child = serializers.IntegerField()

    def __init__(self, **kwargs):
        kwargs.setdefault("min_length", 8)
        kwargs.setdefault("max_length", 8)
        super().__init__(**kwargs)


class FractionField(serializers.Field):
    """'p/q' or 'p' on the wire, Fraction inside."""

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            raise serializers.ValidationError(f"{data!r} is not a fraction") from None

    def to_representation(self, value):
        value = Fraction(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class FixtureRowSerializer(serializers.Serializer):
    root = RootField()
    label = serializers.CharField()
    expected_charge = FractionField()
    expected_colors = serializers.ListField(child=serializers.ChoiceField(choices=COLORS), allow_empty=True)
    note = serializers.CharField(allow_blank=True, required=False, default="")

    def validate_expected_charge(self, value):
        if 12 % value.denominator:
            raise serializers.ValidationError("charge denominators divide 12")
        return value


class RootsFixtureSerializer(serializers.Serializer):
    schema_version = serializers.IntegerField(min_value=1)
    source = serializers.CharField(required=False)
    rows = FixtureRowSerializer(many=True)


class BitswapSerializer(serializers.Serializer):
    slot = serializers.ChoiceField(choices=SWAP_SLOTS)
    leaf = serializers.IntegerField(min_value=1, max_value=48)

    def validate_leaf(self, value):
        if leaf_code(value).b0 != 0:
            raise serializers.ValidationError("a swap is named by the plain leaf of its sibling pair")
        return value


class BitswapPatternSerializer(serializers.Serializer):
    schema_version = serializers.IntegerField(min_value=1)
    label = serializers.CharField()
    root = RootField()
    note = serializers.CharField(required=False, allow_blank=True)
    swaps = BitswapSerializer(many=True)

    def validate_swaps(self, value):
        leaves = [swap["leaf"] for swap in value]
        if len(set(leaves)) != len(leaves):
            raise serializers.ValidationError("a sibling pair appears twice")
        return value


class ParticleRecordSerializer(serializers.Serializer):
    root = serializers.ListField(child=serializers.IntegerField())
    charge = FractionField()
    colors = serializers.ListField(child=serializers.CharField())
    label = serializers.CharField()
    note = serializers.CharField(allow_blank=True)

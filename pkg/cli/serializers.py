from rest_framework import serializers

from hyperfoam.conf import hyperfoam_setting
from lattice.lattice import MIN_SIMPLE_N

MODES = ("f4", "d4-toy", "2d-toy")
FORMATS = ("json", "dot", "csv", "md")


class RunConfigSerializer(serializers.Serializer):
    """Everything that determines a run. Identical configs give byte-identical outputs."""

    n = serializers.IntegerField(min_value=1, default=3)
    mode = serializers.ChoiceField(choices=MODES, default="f4")
    m = serializers.IntegerField(min_value=1, default=6)
    seed = serializers.IntegerField(min_value=0, max_value=2**64 - 1, default=0)
    defects = serializers.ListField(child=serializers.CharField(), default=list)
    script = serializers.CharField(required=False, allow_null=True, allow_blank=True, default=None)
    out = serializers.CharField(required=False, allow_null=True, default=None)
    formats = serializers.ListField(child=serializers.ChoiceField(choices=FORMATS), default=list)
    skip_illegal = serializers.BooleanField(default=False)
    multigraph = serializers.BooleanField(default=False)

    def validate_m(self, value):
        if value < 3:
            raise serializers.ValidationError("the toy lattice needs m >= 3")
        return value

    def validate_defects(self, value):
        sites = []
        for raw in value:
            parts = raw.replace(",", ":").split(":")
            try:
                r, c, h = (int(p) for p in parts)
            except ValueError:
                raise serializers.ValidationError(f"defect {raw!r} is not row:col:h") from None
            if h not in (0, 1):
                raise serializers.ValidationError(f"defect {raw!r}: h must be 0 or 1")
            sites.append((r, c, h))
        return sites

    def validate(self, attrs):
        if attrs["mode"] != "2d-toy" and attrs["n"] < MIN_SIMPLE_N and not attrs["multigraph"]:
            raise serializers.ValidationError(
                {"n": f"n={attrs['n']} needs --multigraph (parallel super-links below n={MIN_SIMPLE_N})"}
            )
        if not attrs.get("out"):
            attrs["out"] = hyperfoam_setting("DEFAULT_OUTPUT_DIR")
        return attrs


class ManifestSerializer(serializers.Serializer):
    schema_version = serializers.IntegerField()
    mode = serializers.CharField()
    n = serializers.IntegerField(required=False)
    m = serializers.IntegerField(required=False)
    multigraph = serializers.BooleanField(required=False)
    supernodes = serializers.IntegerField(required=False)
    nodes = serializers.IntegerField()
    edges = serializers.IntegerField()
    superlinks = serializers.IntegerField(required=False)
    triangles = serializers.IntegerField(required=False)
    informed_nodes = serializers.IntegerField(required=False)
    direction_bijection = serializers.BooleanField()
    trivalent = serializers.BooleanField()
    state_hash = serializers.CharField(required=False)

from rest_framework import serializers

from network.moves import PAIRINGS


class FoamEventSerializer(serializers.Serializer):
    """One line of history.jsonl."""

    seq = serializers.IntegerField(min_value=0)
    edge = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2)
    kind = serializers.CharField()
    pairing = serializers.ChoiceField(choices=PAIRINGS)
    exchanged = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2, max_length=2)
    bits_before = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    bits_after = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))


class MoveScriptEntrySerializer(serializers.Serializer):
    """
    A move script entry is either a bit inversion {supernode, leaf} or a raw
    2-2 move {edge, pairing}. History lines qualify as raw moves, so a
    history file can be fed back as a script.
    """

    supernode = serializers.IntegerField(min_value=0, required=False)
    leaf = serializers.IntegerField(min_value=1, max_value=48, required=False)
    edge = serializers.ListField(
        child=serializers.IntegerField(min_value=0), min_length=2, max_length=2, required=False
    )
    pairing = serializers.ChoiceField(choices=PAIRINGS, required=False)

    def validate(self, attrs):
        inversion = "supernode" in attrs or "leaf" in attrs
        raw = "edge" in attrs or "pairing" in attrs
        if inversion and raw:
            raise serializers.ValidationError("entry mixes an inversion with a raw move")
        if inversion and not ("supernode" in attrs and "leaf" in attrs):
            raise serializers.ValidationError("an inversion needs both supernode and leaf")
        if raw and not ("edge" in attrs and "pairing" in attrs):
            raise serializers.ValidationError("a raw move needs both edge and pairing")
        if not inversion and not raw:
            raise serializers.ValidationError("entry is neither an inversion nor a raw move")
        return attrs


class GraphNodeSerializer(serializers.Serializer):
    id = serializers.IntegerField()
    supernode = serializers.IntegerField()
    local = serializers.IntegerField()
    kind = serializers.CharField()
    bit = serializers.IntegerField()


class SuperlinkSerializer(serializers.Serializer):
    a = serializers.IntegerField()
    leaf_a = serializers.IntegerField()
    b = serializers.IntegerField()
    leaf_b = serializers.IntegerField()


class GraphExportSerializer(serializers.Serializer):
    schema_version = serializers.IntegerField()
    mode = serializers.CharField()
    n = serializers.IntegerField()
    nodes = GraphNodeSerializer(many=True)
    edges = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    superlinks = SuperlinkSerializer(many=True)

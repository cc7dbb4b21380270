from rest_framework import serializers

from picdescent.zlattice.serializers import FgAbelianGroupSerializer, IntMatrixField


class CohomologyMapSerializer(serializers.Serializer):
    """
    Serializer for a map between cohomology groups, on canonical coordinates
    """
    name = serializers.CharField(read_only=True)
    source = FgAbelianGroupSerializer(source='source.group', read_only=True)
    target = FgAbelianGroupSerializer(source='target.group', read_only=True)
    matrix = IntMatrixField(read_only=True)
    injective = serializers.SerializerMethodField()
    surjective = serializers.SerializerMethodField()

    def get_injective(self, obj):
        return obj.is_injective()

    def get_surjective(self, obj):
        return obj.is_surjective()


class SixTermSequenceSerializer(serializers.Serializer):
    """
    Serializer for the six-term sequence: groups, maps and exactness per node
    """
    groups = serializers.SerializerMethodField()
    maps = CohomologyMapSerializer(many=True, read_only=True)
    exactness = serializers.DictField(child=serializers.BooleanField(), read_only=True)
    exact = serializers.SerializerMethodField()

    def get_groups(self, obj):
        return [
            {'node': label, 'group': FgAbelianGroupSerializer(group.group).data}
            for label, group in zip(obj.labels, obj.groups)
        ]

    def get_exact(self, obj):
        return obj.is_exact()


from rest_framework import serializers


class InseparableParametersSerializer(serializers.Serializer):
    """
    Serializer for the (p, q) pair of a characteristic-p computation
    """
    p = serializers.IntegerField(min_value=2)
    q = serializers.IntegerField()


class SeparationSerializer(serializers.Serializer):
    """
    Serializer for one separated pair of classes
    """
    c1 = serializers.CharField(read_only=True)
    c2 = serializers.CharField(read_only=True)
    difference = serializers.CharField(read_only=True)
    degree = serializers.IntegerField(read_only=True)
    z_degree = serializers.IntegerField(read_only=True)
    nonconstant = serializers.BooleanField(read_only=True)


class InseparableReportSerializer(serializers.Serializer):
    """
    Serializer for the identity checks, pair degrees and class count at (p, q)
    """
    p = serializers.IntegerField(read_only=True)
    q = serializers.IntegerField(read_only=True)
    r = serializers.SerializerMethodField()
    identities = serializers.DictField(child=serializers.BooleanField(), read_only=True)
    identities_hold = serializers.SerializerMethodField()
    separations = SeparationSerializer(many=True, read_only=True)
    class_count = serializers.IntegerField(read_only=True)

    def get_r(self, obj):
        return obj['q'] // obj['p']

    def get_identities_hold(self, obj):
        return all(obj['identities'].values())

"""Edit operation validation."""

from typing import TYPE_CHECKING

from bwtcat.enums.edit_kind import EditKind

if TYPE_CHECKING:
    from bwtcat.sensitivity.edit_op import EditOp


class EditOpValidator:
    """Validates an edit against the length of the word it will be applied to."""

    def validate(self, op: "EditOp", length: int) -> bool:
        """Validates if the edit position is in range.

        Insertion may target any gap ``0..length``; deletion and substitution need an
        existing symbol at ``pos``.

        Args:
            op: The edit to validate.
            length: Length of the target word.

        Returns:
            bool: True if the edit can be applied, False otherwise.
        """
        if op.kind is EditKind.INSERT:
            return 0 <= op.pos <= length
        return 0 <= op.pos < length
